#include "jrepair/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "jrepair/config.hpp"
#include "jrepair/report.hpp"

namespace jrepair {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::vector<std::string> sources;
  std::vector<std::string> rules;
  std::vector<std::string> excludes;
  std::string format;
  unsigned jobs = 0;
  bool in_place = false;
  std::string patch_dir;
  std::string repo;
  std::string since, until;
  std::string before, after;  // report
  std::string config;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fills unset fields from the config file; flags win.
RepairOptions resolve(RunConfig& rc) {
  ConfigFile cfg;
  std::optional<fs::path> path = rc.config.empty() ? default_config_path() : std::optional<fs::path>(rc.config);
  if (path) cfg = ConfigFile::load(*path);
  if (rc.sources.empty()) rc.sources = cfg.get_list("source").value_or(std::vector<std::string>{});
  if (rc.rules.empty()) rc.rules = cfg.get_list("rules").value_or(std::vector<std::string>{});
  if (rc.excludes.empty()) rc.excludes = cfg.get_list("exclude").value_or(std::vector<std::string>{});
  if (rc.format.empty()) rc.format = cfg.get_string("format").value_or("text");
  if (rc.jobs == 0) {
    auto j = cfg.get_int("jobs");
    rc.jobs = j && *j > 0 ? static_cast<unsigned>(*j) : std::max(1u, std::thread::hardware_concurrency());
  }
  if (rc.format != "text" && rc.format != "json") throw UsageError("--format must be text or json");

  RepairOptions options;
  if (!rc.rules.empty()) {
    options.rules.clear();
    for (const auto& r : rc.rules) {
      auto id = parse_rule_id(r);
      if (!id) throw UsageError("unknown rule '" + r + "'");
      options.rules.insert(*id);
    }
  }
  options.table = table_with_config(cfg);
  return options;
}

std::vector<fs::path> discover(const RunConfig& rc) {
  if (rc.sources.empty()) throw UsageError("no --source given");
  std::vector<fs::path> roots(rc.sources.begin(), rc.sources.end());
  for (const auto& r : roots) {
    std::error_code ec;
    if (!fs::exists(r, ec)) throw std::runtime_error("source root does not exist: " + r.string());
  }
  return discover_java_files(roots, rc.excludes);
}

std::string location(const std::string& path, const Span& s) {
  return path + ":" + std::to_string(s.start_line) + ":" + std::to_string(s.start_col);
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".jrepair-tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
    o << text;
    if (!o.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- mine ----

int cmd_mine(RunConfig& rc, std::ostream& out, std::ostream& err) {
  auto options = resolve(rc);
  auto files = discover(rc);
  std::vector<std::vector<ViolationRecord>> found(files.size());
  std::vector<std::string> errors(files.size());
  parallel_for(files.size(), rc.jobs, [&](std::size_t i) {
    try {
      found[i] = mine_source(std::make_shared<SourceFile>(SourceFile::load(files[i])), options);
    } catch (const std::exception& e) {
      errors[i] = files[i].generic_string() + ": " + e.what();
    }
  });
  std::size_t total = 0, targets = 0;
  bool failed = false;
  Json list = Json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!errors[i].empty()) {
      err << "error: " << errors[i] << "\n";
      failed = true;
    }
    auto p = files[i].generic_string();
    for (const auto& rec : found[i]) {
      ++total;
      if (rec.status.target) ++targets;
      if (rc.format == "json") {
        list.push_back(violation_json(rec, p));
      } else {
        out << location(p, rec.violation.span) << ": " << rec.violation.message;
        if (!rec.status.target) out << " [excluded: " << rec.status.exclusion_reason << "]";
        out << "\n";
      }
    }
  }
  if (rc.format == "json")
    out << list.dump(2) << "\n";
  else
    out << total << " violation(s), " << targets << " target(s) in " << files.size() << " file(s)\n";
  if (failed) return 2;
  return total == 0 ? 0 : 1;
}

// ---- repair ----

struct HunkNote {
  std::string header;
  std::vector<RuleId> rules;
};

std::vector<HunkNote> annotate_hunks(const PatchArtifact& patch) {
  std::vector<HunkNote> notes;
  for (const auto& h : diff_lines(patch.original, patch.patched)) {
    HunkNote n;
    auto range = [](std::size_t start, std::size_t count) {
      std::size_t first = count == 0 ? start : start + 1;
      return count == 1 ? std::to_string(first) : std::to_string(first) + "," + std::to_string(count);
    };
    n.header = "@@ -" + range(h.old_start, h.old_count) + " +" + range(h.new_start, h.new_count) + " @@";
    std::size_t lo = h.old_start + 1, hi = h.old_start + std::max<std::size_t>(h.old_count, 1);
    for (const auto& f : patch.summary)
      if (f.span.end_line >= lo && f.span.start_line <= hi &&
          std::find(n.rules.begin(), n.rules.end(), f.rule) == n.rules.end())
        n.rules.push_back(f.rule);
    notes.push_back(std::move(n));
  }
  return notes;
}

int cmd_repair(RunConfig& rc, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  auto options = resolve(rc);
  auto files = discover(rc);
  std::vector<FileRepair> results(files.size());
  parallel_for(files.size(), rc.jobs, [&](std::size_t i) {
    try {
      results[i] = repair_source(std::make_shared<SourceFile>(SourceFile::load(files[i])), options);
    } catch (const std::exception& e) {
      results[i].path = files[i];
      results[i].error = e.what();
    }
  });

  std::map<RuleId, std::int64_t> dv, tv, da;
  bool operational = false, incomplete = false;
  Json jfiles = Json::array();
  std::ostringstream summary, diffs;
  for (auto& r : results) {
    auto p = r.path.generic_string();
    if (r.error) {
      err << "error: " << p << ": " << *r.error << "\n";
      operational = true;
      continue;
    }
    for (const auto& rec : r.before) {
      ++dv[rec.violation.rule];
      if (rec.status.target) ++tv[rec.violation.rule];
    }
    for (const auto& v : r.after) ++da[v.rule];
    if (!r.deferred.empty() || !r.failed.empty()) incomplete = true;

    if (!r.patch.diff.empty()) {
      if (rc.in_place) {
        write_file(r.path, r.patch.patched);
      } else if (!rc.patch_dir.empty()) {
        auto rel = r.path.relative_path();
        write_file(fs::path(rc.patch_dir) / (rel.string() + ".patch"), r.patch.diff);
      } else {
        diffs << r.patch.diff;
      }
    }
    auto notes = annotate_hunks(r.patch);
    Json jf;
    jf["path"] = p;
    Json jv = Json::array();
    for (const auto& rec : r.before) jv.push_back(violation_json(rec, p));
    jf["violations"] = jv;
    Json jfixed = Json::array();
    for (const auto& f : r.patch.summary)
      jfixed.push_back({{"rule", std::string(rule_key(f.rule))}, {"startLine", f.span.start_line}, {"startCol", f.span.start_col}});
    jf["fixed"] = jfixed;
    Json jh = Json::array();
    for (const auto& n : notes) {
      Json rules = Json::array();
      for (auto id : n.rules) rules.push_back(std::string(rule_key(id)));
      jh.push_back({{"header", n.header}, {"rules", rules}});
      summary << p << ": " << n.header;
      for (auto id : n.rules) summary << " " << rule_key(id);
      summary << "\n";
    }
    jf["hunks"] = jh;
    Json jd = Json::array();
    for (const auto& d : r.deferred) {
      const auto& plan = r.plans[d.plan];
      jd.push_back({{"rule", std::string(rule_key(plan.rule))},
                    {"startLine", plan.violation.span.start_line},
                    {"startCol", plan.violation.span.start_col},
                    {"reason", d.reason}});
      summary << location(p, plan.violation.span) << ": " << rule_key(plan.rule) << " deferred: " << d.reason << "\n";
    }
    for (const auto& f : r.failed) {
      const auto& v = r.before[f.violation].violation;
      jd.push_back({{"rule", std::string(rule_key(v.rule))},
                    {"startLine", v.span.start_line},
                    {"startCol", v.span.start_col},
                    {"reason", f.reason}});
      summary << location(p, v.span) << ": " << rule_key(v.rule) << " not fixed: " << f.reason << "\n";
    }
    jf["deferred"] = jd;
    if (rc.format == "json" && !rc.in_place && rc.patch_dir.empty()) jf["diff"] = r.patch.diff;
    jfiles.push_back(std::move(jf));
  }

  std::vector<RuleStats> stats;
  for (auto id : options.rules) {
    stats.push_back(compute_stats(id, dv[id], tv[id], da[id]));
    // every target fixed means nothing beyond the non-targets survives
    if (da[id] > dv[id] - tv[id]) incomplete = true;
  }
  auto report = aggregate(stats);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (rc.format == "json") {
    Json j{{"files", jfiles},
           {"report", report_json(report)},
           {"wallTimeSeconds", wall},
           {"wallTimeNote", "total wall time of this run; not comparable to per-project timings"}};
    out << j.dump(2) << "\n";
  } else {
    // diffs alone on stdout keep it pipeable into patch(1)
    bool split = !rc.in_place && rc.patch_dir.empty();
    std::ostream& info = split ? err : out;
    out << diffs.str();
    info << summary.str() << render_table(report);
    for (const auto& s : report.rules)
      for (const auto& w : s.warnings) info << "warning: " << rule_key(*s.rule) << ": " << w << "\n";
    char t[64];
    std::snprintf(t, sizeof t, "%.2f", wall);
    info << "wall time " << t << " s (whole run, not comparable to per-project timings)\n";
  }
  if (operational) return 2;
  return incomplete ? 1 : 0;
}

// ---- scan-history ----

int cmd_scan(RunConfig& rc, std::ostream& out, std::ostream& err) {
  auto options = resolve(rc);
  if (rc.repo.empty()) throw UsageError("--repo is required");
  GitRepo repo(rc.repo);
  auto report = scan_history(repo, rc.since, rc.until, options, rc.jobs);
  if (!rc.patch_dir.empty())
    for (const auto& p : report.patches) write_file(fs::path(rc.patch_dir) / p.file_name(), p.text());
  if (rc.format == "json") {
    out << history_json(report).dump(2) << "\n";
  } else {
    out << report.commits.size() << " commit(s) touching .java files\n";
    for (const auto& c : report.commits)
      for (const auto& d : c.rules)
        if (d.introduced > 0)
          out << c.commit.ref.sha.substr(0, 7) << " " << rule_key(d.rule) << " introduced " << d.introduced << "\n";
    for (const auto& p : report.patches) out << "patch " << p.file_name() << " fixes " << p.fixed << "\n";
    for (const auto& e : report.empty_patches)
      out << "empty " << e.commit.substr(0, 7) << " " << rule_key(e.rule) << ": " << e.reason << "\n";
  }
  for (const auto& d : report.diagnostics) err << "note: " << d << "\n";
  bool incomplete = !report.empty_patches.empty();
  for (const auto& p : report.patches) incomplete = incomplete || !p.deferred.empty();
  return incomplete ? 1 : 0;
}

// ---- report ----

int cmd_report(RunConfig& rc, std::ostream& out, std::ostream&) {
  auto options = resolve(rc);
  if (rc.before.empty() || rc.after.empty()) throw UsageError("report needs --before and --after");
  auto before = violations_from_json(Json::parse(read_file(rc.before)));
  auto after = violations_from_json(Json::parse(read_file(rc.after)));
  auto report = report_from_violations(options.rules, before, after);
  if (rc.format == "json")
    out << report_json(report).dump(2) << "\n";
  else
    out << render_table(report);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Detects and repairs SonarJava bug-rule violations in Java sources"};
  app.require_subcommand(1);
  RunConfig rc;
  app.add_option("--config", rc.config, "Config file (default: $JREPAIR_CONFIG, then ./jrepair.toml)");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--rule", rc.rules, "Rule to process (repeatable; default all)");
    sub->add_option("--format", rc.format, "Output format: text or json");
    sub->add_option("--jobs", rc.jobs, "Worker threads");
  };
  auto sources = [&](CLI::App* sub) {
    sub->add_option("--source", rc.sources, "Source root (repeatable)");
    sub->add_option("--exclude", rc.excludes, "Glob of paths to skip (repeatable)");
  };

  auto* mine = app.add_subcommand("mine", "List violations");
  common(mine);
  sources(mine);

  auto* repair = app.add_subcommand("repair", "Fix target violations");
  common(repair);
  sources(repair);
  auto* in_place = repair->add_flag("--in-place", rc.in_place, "Rewrite files instead of printing diffs");
  auto* pd = repair->add_option("--patch-dir", rc.patch_dir, "Write one .patch per file here");
  in_place->excludes(pd);

  auto* scan = app.add_subcommand("scan-history", "Find violation-introducing commits and patch them");
  common(scan);
  scan->add_option("--repo", rc.repo, "Repository path")->required();
  scan->add_option("--since", rc.since, "Earliest commit date (git date syntax)");
  scan->add_option("--until", rc.until, "Latest commit date (git date syntax)");
  scan->add_option("--patch-dir", rc.patch_dir, "Directory for <shortsha>-<rule>.patch files");

  auto* rep = app.add_subcommand("report", "Recompute metrics from serialized violation lists");
  common(rep);
  rep->add_option("--before", rc.before, "Violations before repair (mine --format json)")->required();
  rep->add_option("--after", rc.after, "Violations after repair (mine --format json)")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  try {
    if (*mine) return cmd_mine(rc, out, err);
    if (*repair) return cmd_repair(rc, out, err);
    if (*scan) return cmd_scan(rc, out, err);
    return cmd_report(rc, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace jrepair
