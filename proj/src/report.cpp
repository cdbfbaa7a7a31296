#include "jrepair/report.hpp"

#include <map>

namespace jrepair {

const char* const kIntroducedDefinition =
    "per changed .java file and rule: max(0, violations at commit - violations at first parent), summed over files; "
    "positions are not matched across revisions";

Json violation_json(const Violation& v, const std::string& path) {
  Json j;
  j["rule"] = std::string(rule_key(v.rule));
  j["path"] = path;
  j["startLine"] = v.span.start_line;
  j["startCol"] = v.span.start_col;
  j["endLine"] = v.span.end_line;
  j["endCol"] = v.span.end_col;
  j["message"] = v.message;
  return j;
}

Json violation_json(const ViolationRecord& rec, const std::string& path) {
  auto j = violation_json(rec.violation, path);
  j["target"] = rec.status.target;
  if (!rec.status.target) j["exclusionReason"] = rec.status.exclusion_reason;
  return j;
}

Json fraction_json(const std::optional<Fraction>& f) {
  if (!f) return nullptr;
  return Json{{"num", f->num}, {"den", f->den}, {"percent", f->percent()}};
}

Json stats_json(const RuleStats& s) {
  Json j;
  if (s.rule) j["rule"] = std::string(rule_key(*s.rule));
  j["dv"] = s.dv;
  j["tv"] = s.tv;
  j["fv"] = s.fv;
  j["dvAfter"] = s.dv_after;
  j["tdr"] = fraction_json(s.tdr);
  j["ftr"] = fraction_json(s.ftr);
  j["fdr"] = fraction_json(s.fdr);
  j["trtMinutes"] = s.trt_minutes;
  j["warnings"] = s.warnings;
  return j;
}

Json report_json(const RepairReport& report) {
  Json rules = Json::array();
  for (const auto& s : report.rules) rules.push_back(stats_json(s));
  return Json{{"rules", rules}, {"all", stats_json(report.all)}};
}

Json history_json(const HistoryReport& report) {
  Json commits = Json::array();
  for (const auto& c : report.commits) {
    Json entries = Json::array();
    for (const auto& d : c.rules)
      entries.push_back({{"rule", std::string(rule_key(d.rule))},
                         {"atCommit", d.at_commit},
                         {"atParent", d.at_parent},
                         {"introduced", d.introduced}});
    commits.push_back({{"commit", c.commit.ref.sha},
                       {"parent", c.commit.parent.empty() ? Json(nullptr) : Json(c.commit.parent)},
                       {"time", c.commit.ref.time},
                       {"changedFiles", c.commit.java_files},
                       {"rules", entries}});
  }
  Json patches = Json::array();
  for (const auto& p : report.patches) {
    Json files = Json::array();
    for (const auto& f : p.files) files.push_back(f.path.generic_string());
    patches.push_back({{"commit", p.commit},
                       {"rule", std::string(rule_key(p.rule))},
                       {"file", p.file_name()},
                       {"changedFiles", files},
                       {"fixed", p.fixed},
                       {"deferred", p.deferred}});
  }
  Json empty = Json::array();
  for (const auto& e : report.empty_patches)
    empty.push_back({{"commit", e.commit}, {"rule", std::string(rule_key(e.rule))}, {"reason", e.reason}});
  return Json{{"introducedDefinition", kIntroducedDefinition},
              {"commits", commits},
              {"patches", patches},
              {"emptyPatches", empty},
              {"diagnostics", report.diagnostics}};
}

std::vector<SerializedViolation> violations_from_json(const Json& list) {
  if (!list.is_array()) throw std::runtime_error("violation list must be a JSON array");
  std::vector<SerializedViolation> out;
  for (const auto& j : list) {
    if (!j.is_object() || !j.contains("rule") || !j.contains("target"))
      throw std::runtime_error("violation record needs 'rule' and 'target'");
    auto rule = parse_rule_id(j.at("rule").get<std::string>());
    if (!rule) throw std::runtime_error("unknown rule " + j.at("rule").get<std::string>());
    out.push_back({*rule, j.value("path", std::string()), j.at("target").get<bool>()});
  }
  return out;
}

RepairReport report_from_violations(const std::set<RuleId>& rules, const std::vector<SerializedViolation>& before,
                                    const std::vector<SerializedViolation>& after) {
  std::map<RuleId, std::int64_t> dv, tv, da;
  for (const auto& v : before) {
    ++dv[v.rule];
    if (v.target) ++tv[v.rule];
  }
  for (const auto& v : after) ++da[v.rule];
  std::vector<RuleStats> stats;
  for (auto r : rules) stats.push_back(compute_stats(r, dv[r], tv[r], da[r]));
  return aggregate(stats);
}

}  // namespace jrepair
