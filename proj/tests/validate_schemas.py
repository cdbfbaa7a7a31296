"""Runs the CLI on fixtures and validates each JSON output against schemas/."""
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

binary, fixtures, schemas = (pathlib.Path(a) for a in sys.argv[1:4])

registry = Registry()
loaded = {}
for f in schemas.glob("*.schema.json"):
    doc = json.loads(f.read_text())
    loaded[f.name] = doc
    registry = registry.with_resource(doc["$id"], Resource.from_contents(doc))


def validator(name):
    cls = jsonschema.validators.validator_for(loaded[name])
    cls.check_schema(loaded[name])
    return cls(loaded[name], registry=registry)


def run(*args, codes=(0, 1)):
    p = subprocess.run([str(binary), *args], capture_output=True, text=True)
    assert p.returncode in codes, f"{args}: exit {p.returncode}\n{p.stderr}"
    return json.loads(p.stdout)


failures = 0


def check(name, doc, what):
    global failures
    errors = list(validator(name).iter_errors(doc))
    for e in errors[:5]:
        print(f"{what}: {e.json_path}: {e.message}")
    failures += bool(errors)


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    src = tmp / "src"
    for rule_dir in sorted((fixtures / "rules").iterdir()):
        if rule_dir.is_dir():
            shutil.copytree(rule_dir, src / rule_dir.name, ignore=shutil.ignore_patterns("*.fixed.java", "*.diff", "*.txt"))
    shutil.copytree(fixtures / "combined", src / "combined", ignore=shutil.ignore_patterns("*.pass*.java", "*.fixed.java"))

    mined = run("mine", "--source", str(src), "--format", "json")
    check("violations.schema.json", mined, "mine")
    assert any(not v["target"] for v in mined) and any(v["target"] for v in mined)

    repaired = run("repair", "--source", str(src), "--format", "json")
    check("repair-report.schema.json", repaired, "repair")
    assert any(f["deferred"] for f in repaired["files"])

    (tmp / "before.json").write_text(json.dumps(mined))
    check("repair-report.schema.json", run("repair", "--source", str(src), "--in-place", "--format", "json"), "in-place")
    (tmp / "after.json").write_text(json.dumps(run("mine", "--source", str(src), "--format", "json")))
    report = run("report", "--before", str(tmp / "before.json"), "--after", str(tmp / "after.json"), "--format", "json")
    check("repair-report.schema.json", {"files": [], "report": report, "wallTimeSeconds": 0, "wallTimeNote": ""}, "report")

    repo = tmp / "repo"
    subprocess.run(["bash", str(fixtures / "history" / "make_repo.sh"), str(repo)], check=True, capture_output=True)
    scan = run("scan-history", "--repo", str(repo), "--format", "json")
    check("scan-report.schema.json", scan, "scan-history")
    assert len(scan["patches"]) == 3

    # the schemas are not vacuous
    bad = dict(mined[0], target=False)
    bad.pop("exclusionReason", None)
    if validator("violations.schema.json").is_valid([bad]):
        print("schema accepted an excluded violation without a reason")
        failures += 1

print("schema validation", "failed" if failures else "ok")
sys.exit(1 if failures else 0)
