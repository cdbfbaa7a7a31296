// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "helpers.hpp"
#include "jrepair/cli.hpp"
#include "jrepair/history.hpp"
#include "jrepair/metrics.hpp"
#include "jrepair/pipeline.hpp"
#include "jrepair/printer.hpp"
#include "jrepair/report.hpp"
#include "synthetic.hpp"

using namespace jrepair;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;  // first failure explains
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  char b[32];
  std::snprintf(b, sizeof b, "%.2f", s);
  return b;
}

RepairOptions only(RuleId r) {
  RepairOptions o;
  o.rules = {r};
  return o;
}

// Golden repairs of the per-rule suite, shared by criteria 2, 3 and 5.
struct Golden {
  std::string rule, file;
  fs::path dir;
  std::shared_ptr<const SourceFile> source;
  FileRepair repair;
};

const std::vector<Golden>& goldens() {
  static std::vector<Golden> out = [] {
    std::vector<Golden> v;
    for (auto dir : testutil::kRuleDirs) {
      auto path = testutil::fixtures() / "rules" / dir;
      std::vector<fs::path> fixed;
      for (const auto& e : fs::directory_iterator(path))
        if (e.path().filename().string().ends_with(".fixed.java")) fixed.push_back(e.path());
      std::sort(fixed.begin(), fixed.end());
      for (const auto& f : fixed) {
        auto name = f.filename().string();
        auto file = name.substr(0, name.size() - 11) + ".java";
        auto src = testutil::load_as(path / file, file);
        v.push_back({dir, file, path, src, repair_source(src, only(*parse_rule_id(dir)))});
      }
    }
    return v;
  }();
  return out;
}

Outcome roundtrip() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int files = 0, crlf = 0, tabs = 0, verbatim = 0;
  for (const auto& e : fs::directory_iterator(testutil::fixtures() / "roundtrip")) {
    if (e.path().extension() != ".java") continue;
    ++files;
    auto file = std::make_shared<SourceFile>(SourceFile::load(e.path()));
    auto tree = parse(file);
    if (!detect_all(tree, build_scopes(tree), all_rule_ids()).empty())
      o.fail(e.path().filename().string() + " is not violation-free");
    if (print(EditedTree(tree), PrintMode::Descend) != file->text) o.fail(e.path().filename().string() + " differs");
    crlf += file->text.find("\r\n") != std::string::npos;
    tabs += file->text.find("\n\t") != std::string::npos;
    for (NodeId n = 0; n < tree.nodes.size(); ++n)
      if (tree.kind(n) == NodeKind::Verbatim) {
        ++verbatim;
        break;
      }
  }
  double s = seconds_since(t0);
  if (files < 50) o.fail("only " + std::to_string(files) + " files");
  if (!crlf || !tabs || !verbatim) o.fail("corpus lacks CRLF, tab or verbatim coverage");
  if (s >= 5.0) o.fail("took " + fmt(s) + " s");
  if (o.ok)
    o.detail = std::to_string(files) + "/" + std::to_string(files) + " files identical (" + std::to_string(crlf) +
               " CRLF, " + std::to_string(tabs) + " tab-indented, " + std::to_string(verbatim) +
               " with verbatim nodes) in " + fmt(s) + " s";
  return o;
}

Outcome golden_suite() {
  Outcome o;
  int labelled = 0;
  for (auto dir : testutil::kRuleDirs) {
    auto rule = *parse_rule_id(dir);
    auto path = testutil::fixtures() / "rules" / dir;
    int pos = 0, neg = 0;
    for (auto& [file, want] : testutil::read_labels(path)) {
      auto recs = mine_source(testutil::load_as(path / file, file), only(rule));
      std::vector<testutil::Label> got;
      for (const auto& r : recs)
        got.push_back({std::to_string(r.violation.span.start_line) + ":" + std::to_string(r.violation.span.start_col),
                       r.status.target ? "target" : "excluded"});
      std::sort(got.begin(), got.end());
      auto w = want;
      std::sort(w.begin(), w.end());
      if (got != w) o.fail(std::string(dir) + "/" + file + " detection differs from labels");
      ++labelled;
      if (file.rfind("neg_", 0) == 0) ++neg;
      if (file.rfind("pos_", 0) == 0) ++pos;
    }
    if (pos < 5 || neg < 5) o.fail(std::string(dir) + " has fewer than 5 positive or negative fixtures");
  }
  for (const auto& g : goldens()) {
    auto id = g.rule + "/" + g.file;
    const auto& r = g.repair;
    auto base = g.file.substr(0, g.file.size() - 5);
    if (r.error || r.patch.diff != testutil::slurp(g.dir / (base + ".diff"))) o.fail(id + " diff differs from golden");
    for (auto i : r.applied)
      for (const auto& v : r.after)
        if (v.span.start_line == r.plans[i].violation.span.start_line &&
            v.span.start_col == r.plans[i].violation.span.start_col)
          o.fail(id + " still violates at a fixed anchor");
  }
  // canonical examples quoted verbatim
  const std::pair<const char*, const char*> canon[] = {
      {"S1217/pos_01.java", "Thread myThread = new Thread(runnable);\n        myThread.run();"},
      {"S2142/pos_01.java", "} catch (InterruptedException e) {\n            e.printStackTrace();\n        }"},
      {"S1860/pos_01.fixed.java", "private final Object lockLOCK = new Object();"},
      {"S2095/pos_01.fixed.java", "try (FileInputStream in = new FileInputStream(f)) {"},
      {"S2111/pos_01.fixed.java", "BigDecimal.valueOf(2.5)"},
      {"S2116/pos_01.fixed.java", "Arrays.toString(arr)"},
      {"S2184/pos_01.fixed.java", "long seconds = 24L * 60 * 60;"},
      {"S2225/pos_01.fixed.java", "return \"\";"},
      {"S2272/pos_01.fixed.java", "throw new NoSuchElementException();"},
      {"S4973/pos_01.fixed.java", "s1.equals(s2)"},
  };
  for (auto [file, snippet] : canon)
    if (testutil::slurp(testutil::fixtures() / "rules" / file).find(snippet) == std::string::npos)
      o.fail(std::string(file) + " lacks the canonical example");
  if (o.ok)
    o.detail = "10 rules, " + std::to_string(labelled) + " labelled fixtures exact, " + std::to_string(goldens().size()) +
               " golden diffs byte-equal, canonical examples present";
  return o;
}

Outcome idempotence() {
  Outcome o;
  for (const auto& g : goldens()) {
    auto again = repair_source(std::make_shared<SourceFile>(SourceFile::from_text(g.file, g.repair.patch.patched)),
                               only(*parse_rule_id(g.rule)));
    if (!again.plans.empty() || !again.patch.diff.empty()) o.fail(g.rule + "/" + g.file + " changes on a second run");
  }
  if (o.ok) o.detail = std::to_string(goldens().size()) + " repaired fixtures: zero plans, empty diff";
  return o;
}

Outcome metrics() {
  Outcome o;
  struct Row {
    RuleId rule;
    std::int64_t dv, tv, fv;
  };
  const Row rows[] = {{RuleId::S1217, 2, 2, 2},     {RuleId::S1860, 5, 5, 5},     {RuleId::S2095, 782, 361, 34},
                      {RuleId::S2111, 69, 69, 37},  {RuleId::S2116, 1, 1, 1},     {RuleId::S2142, 316, 315, 300},
                      {RuleId::S2184, 440, 431, 368}, {RuleId::S2225, 22, 3, 3},  {RuleId::S2272, 41, 40, 34},
                      {RuleId::S4973, 81, 80, 68}};
  std::vector<RuleStats> stats;
  for (const auto& r : rows) stats.push_back(compute_stats(r.rule, r.dv, r.tv, r.dv - r.fv));
  auto rep = aggregate(stats);
  auto check_row = [&](const RuleStats& s, int tdr, int ftr, int fdr, std::int64_t trt, const char* name) {
    if (s.tdr->percent() != tdr || s.ftr->percent() != ftr || s.fdr->percent() != fdr || s.trt_minutes != trt)
      o.fail(std::string(name) + " row does not reproduce");
  };
  check_row(stats[5], 99, 95, 94, 4500, "S2142");
  check_row(stats[0], 100, 100, 100, 40, "S1217");
  check_row(rep.all, 74, 65, 48, 7340, "ALL");
  // identity on the replay and on every golden run
  std::vector<RuleStats> checked = stats;
  checked.push_back(rep.all);
  for (const auto& g : goldens()) {
    std::int64_t dv = g.repair.before.size(), tv = 0;
    for (const auto& r : g.repair.before) tv += r.status.target;
    checked.push_back(compute_stats(*parse_rule_id(g.rule), dv, tv, g.repair.after.size()));
  }
  for (const auto& s : checked)
    if (s.tdr && s.ftr && s.fdr && !(*s.fdr == *s.ftr * *s.tdr)) o.fail("fdr != ftr x tdr");
  if (o.ok)
    o.detail = "S2142 (99%, 95%, 94%, 4500), S1217 (100%, 100%, 100%, 40), ALL (74%, 65%, 48%, 7340); identity on " +
               std::to_string(checked.size()) + " stat rows";
  return o;
}

Outcome locality() {
  Outcome o;
  std::size_t lines = 0;
  for (const auto& g : goldens()) {
    auto tree = parse(g.source);
    std::vector<LineRange> fp;
    for (auto i : g.repair.applied) {
      auto f = plan_footprint(tree, g.repair.plans[i]);
      fp.insert(fp.end(), f.begin(), f.end());
    }
    auto covered = [&](std::size_t l) {
      return std::any_of(fp.begin(), fp.end(), [&](const LineRange& r) { return r.first <= l && l <= r.last; });
    };
    auto ch = changed_lines(g.repair.patch.original, g.repair.patch.patched);
    for (auto l : ch.removed) {
      ++lines;
      if (!covered(l)) o.fail(g.rule + "/" + g.file + " line " + std::to_string(l) + " outside the plan footprint");
    }
    for (auto l : ch.inserted_before) {
      ++lines;
      if (!covered(l) && !covered(l - 1))
        o.fail(g.rule + "/" + g.file + " insertion at " + std::to_string(l) + " outside the plan footprint");
    }
  }
  if (o.ok) o.detail = std::to_string(lines) + " changed lines/insertion points all inside plan footprints";
  return o;
}

Outcome history() {
  Outcome o;
  testutil::TempDir tmp("acceptance");
  auto repo_dir = tmp.path / "repo";
  int st = -1;
  testutil::capture("bash " + (testutil::fixtures() / "history/make_repo.sh").string() + " " + repo_dir.string() +
                        " >/dev/null 2>&1",
                    &st);
  if (st != 0) {
    o.fail("fixture script failed");
    return o;
  }
  std::map<std::pair<std::string, std::string>, std::int64_t> want, got;
  int commits = 0;
  std::istringstream in(testutil::slurp(repo_dir.string() + ".expected"));
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag, sha, rule;
    ls >> tag;
    if (tag == "commit") ++commits;
    if (tag == "patch") {
      std::int64_t n;
      ls >> sha >> rule >> n;
      want[{sha, rule}] = n;
    }
  }
  GitRepo repo(repo_dir);
  auto report = scan_history(repo, "", "", RepairOptions{}, 4);
  std::set<std::string> introducing;
  for (const auto& p : report.patches) {
    got[{p.commit, std::string(rule_key(p.rule))}] = p.fixed;
    introducing.insert(p.commit);
  }
  if (commits != 6) o.fail("script made " + std::to_string(commits) + " commits");
  if (introducing.size() != 2) o.fail(std::to_string(introducing.size()) + " introducing commits");
  if (got != want) o.fail("patches differ from the recorded hand count");
  if (o.ok) o.detail = "6 commits, 2 introducing, " + std::to_string(got.size()) + " CommitPatches with expected fixed counts";
  return o;
}

Outcome performance() {
  Outcome o;
  testutil::TempDir tmp("perf");
  auto lines = synthetic::write_project(tmp.path, 10000);
  double worst = 0;
  std::string worst_rule;
  for (const auto& info : all_rules()) {
    std::string key(info.key);
    std::ostringstream out, err;
    auto t0 = std::chrono::steady_clock::now();
    int mine = run_cli({"mine", "--source", tmp.path.string(), "--rule", key, "--format", "json", "--jobs", "1"}, out, err);
    std::ostringstream rout, rerr;
    int repair =
        run_cli({"repair", "--source", tmp.path.string(), "--rule", key, "--format", "json", "--jobs", "1"}, rout, rerr);
    double s = seconds_since(t0);
    if (mine == 2 || repair == 2) o.fail(key + " run failed: " + err.str() + rerr.str());
    // the project must exercise the rule, or the timing says nothing
    auto all = Json::parse(rout.str())["report"]["all"];
    if (all["dv"] == 0 || all["fv"] == 0) o.fail(key + " has no fixed violations in the synthetic project");
    if (s > worst) worst = s, worst_rule = key;
  }
  if (worst > 10.0) o.fail("slowest rule " + worst_rule + " took " + fmt(worst) + " s");
  if (o.ok)
    o.detail = std::to_string(lines) + " lines; slowest rule " + worst_rule + " " + fmt(worst) +
               " s single-threaded (limit 10 s)";
  return o;
}

Outcome s2225_split() {
  Outcome o;
  auto dir = testutil::fixtures() / "rules/S2225";
  auto split = repair_source(testutil::load_as(dir / "split_01.java", "split_01.java"), only(RuleId::S2225));
  if (split.before.size() != 2) {
    o.fail("expected two S2225 violations");
    return o;
  }
  const auto& clone = split.before[0];
  const auto& ts = split.before[1];
  if (clone.status.target || clone.status.exclusion_reason != "clone not amenable to template repair")
    o.fail("clone() not excluded");
  if (!ts.status.target) o.fail("toString() not targeted");
  if (split.patch.patched != testutil::slurp(dir / "split_01.fixed.java")) o.fail("split repair differs");
  if (split.after.size() != 1) o.fail("clone violation should remain");
  if (o.ok) o.detail = "clone() excluded with reason, toString() repaired, clone left untouched";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"round-trip identity", roundtrip},  {"per-rule golden suite", golden_suite},
      {"idempotence", idempotence},        {"metric identities", metrics},
      {"locality", locality},              {"history miner", history},
      {"performance", performance},        {"assumption-checker split", s2225_split},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << name << ": " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
