#include "jrepair/metrics.hpp"

#include <cstdio>

namespace jrepair {

std::optional<Fraction> ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return Fraction{num, den};
}

namespace {

void fill_ratios(RuleStats& s) {
  s.tdr = ratio(s.tv, s.dv);
  s.ftr = ratio(s.fv, s.tv);
  s.fdr = ratio(s.fv, s.dv);
  if (s.fv > s.tv)
    s.warnings.push_back("fixed count " + std::to_string(s.fv) + " exceeds target count " + std::to_string(s.tv) +
                         ": a fix removed a non-target violation");
}

}  // namespace

RuleStats stats_from_counts(RuleId rule, std::int64_t dv, std::int64_t tv, std::int64_t fv) {
  RuleStats s;
  s.rule = rule;
  s.dv = dv;
  s.tv = tv;
  if (fv < 0) {
    s.warnings.push_back("more violations after repair than before; fixed count clamped to 0");
    fv = 0;
  }
  s.fv = fv;
  s.dv_after = dv - fv;
  s.trt_minutes = fv * rule_info(rule).remediation_minutes;
  fill_ratios(s);
  return s;
}

RuleStats compute_stats(RuleId rule, std::int64_t dv, std::int64_t tv, std::int64_t dv_after) {
  auto s = stats_from_counts(rule, dv, tv, dv - dv_after);
  s.dv_after = dv_after;
  return s;
}

RepairReport aggregate(const std::vector<RuleStats>& stats) {
  RepairReport r;
  r.rules = stats;
  for (const auto& s : stats) {
    r.all.dv += s.dv;
    r.all.tv += s.tv;
    r.all.fv += s.fv;
    r.all.dv_after += s.dv_after;
    r.all.trt_minutes += s.trt_minutes;
  }
  fill_ratios(r.all);
  return r;
}

namespace {

std::string cell(const std::optional<Fraction>& f) {
  if (!f) return "--";
  return std::to_string(f->percent()) + "% (" + f->to_string() + ")";
}

}  // namespace

std::string render_table(const RepairReport& report) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-18s %-18s %-18s %10s\n", "SQID", "TDR (TV/DV)", "FTR (FV/TV)", "FDR (FV/DV)",
                "TRT (min)");
  out += line;
  auto row = [&](const std::string& id, const RuleStats& s) {
    std::snprintf(line, sizeof line, "%-6s %-18s %-18s %-18s %10lld\n", id.c_str(), cell(s.tdr).c_str(),
                  cell(s.ftr).c_str(), cell(s.fdr).c_str(), static_cast<long long>(s.trt_minutes));
    out += line;
  };
  for (const auto& s : report.rules) row(std::string(rule_key(*s.rule)), s);
  row("ALL", report.all);
  return out;
}

}  // namespace jrepair
