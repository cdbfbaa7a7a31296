#include "doctest.h"
#include "helpers.hpp"
#include "jrepair/metrics.hpp"
#include "jrepair/report.hpp"

using namespace jrepair;

namespace {

struct Row {
  RuleId rule;
  std::int64_t dv, tv, fv;
  int tdr, ftr, fdr;
  std::int64_t trt;
};

// Published applicability table, counts and rendered percentages.
const Row kTable3[] = {
    {RuleId::S1217, 2, 2, 2, 100, 100, 100, 40},      {RuleId::S1860, 5, 5, 5, 100, 100, 100, 75},
    {RuleId::S2095, 782, 361, 34, 46, 9, 4, 170},     {RuleId::S2111, 69, 69, 37, 100, 53, 53, 185},
    {RuleId::S2116, 1, 1, 1, 100, 100, 100, 5},       {RuleId::S2142, 316, 315, 300, 99, 95, 94, 4500},
    {RuleId::S2184, 440, 431, 368, 97, 85, 83, 1840}, {RuleId::S2225, 22, 3, 3, 13, 100, 13, 15},
    {RuleId::S2272, 41, 40, 34, 97, 85, 82, 170},     {RuleId::S4973, 81, 80, 68, 98, 85, 83, 340},
};

void check_identity(const RuleStats& s) {
  if (s.tdr && s.ftr && s.fdr) CHECK(*s.fdr == *s.ftr * *s.tdr);
  if (s.tdr) {
    CHECK(s.tdr->num >= 0);
    CHECK(s.tdr->num <= s.tdr->den);
  }
  if (s.fdr && s.ftr && s.fv <= s.tv) CHECK(s.fdr->num * s.ftr->den <= s.ftr->num * s.fdr->den);
}

}  // namespace

TEST_CASE("Table 3 rows replay exactly") {
  std::vector<RuleStats> stats;
  for (const auto& r : kTable3) {
    CAPTURE(rule_key(r.rule));
    auto s = compute_stats(r.rule, r.dv, r.tv, r.dv - r.fv);
    CHECK(s.fv == r.fv);
    CHECK(s.tdr->percent() == r.tdr);
    CHECK(s.ftr->percent() == r.ftr);
    CHECK(s.fdr->percent() == r.fdr);
    CHECK(s.trt_minutes == r.trt);
    CHECK(s.warnings.empty());
    check_identity(s);
    stats.push_back(s);
  }
  auto rep = aggregate(stats);
  CHECK(rep.all.dv == 1759);
  CHECK(rep.all.tv == 1307);
  CHECK(rep.all.fv == 852);
  CHECK(rep.all.tdr->to_string() == "1307/1759");
  CHECK(rep.all.tdr->percent() == 74);
  CHECK(rep.all.ftr->percent() == 65);
  CHECK(rep.all.fdr->percent() == 48);
  CHECK(rep.all.trt_minutes == 7340);
  check_identity(rep.all);
}

TEST_CASE("S2142 and S1217 examples") {
  auto s = stats_from_counts(RuleId::S2142, 316, 315, 300);
  CHECK(s.ftr->to_string() == "300/315");
  CHECK(s.tdr->percent() == 99);
  CHECK(s.ftr->percent() == 95);
  CHECK(s.fdr->percent() == 94);
  CHECK(s.trt_minutes == 4500);
  auto t = stats_from_counts(RuleId::S1217, 2, 2, 2);
  CHECK(t.tdr->percent() == 100);
  CHECK(t.fdr->percent() == 100);
  CHECK(t.trt_minutes == 40);
}

TEST_CASE("dv = 0 leaves the ratios undefined") {
  auto s = compute_stats(RuleId::S2111, 0, 0, 0);
  CHECK_FALSE(s.tdr);
  CHECK_FALSE(s.ftr);
  CHECK_FALSE(s.fdr);
  CHECK(s.fv == 0);
  CHECK(s.trt_minutes == 0);
  auto j = stats_json(s);
  CHECK(j["tdr"].is_null());
  CHECK(j["fdr"].is_null());
  // tv = 0 with dv > 0: ftr alone undefined
  auto e = compute_stats(RuleId::S2225, 3, 0, 3);
  CHECK(e.tdr);
  CHECK_FALSE(e.ftr);
}

TEST_CASE("aggregate of two synthetic rules") {
  auto rep = aggregate({stats_from_counts(RuleId::S2095, 10, 5, 4), stats_from_counts(RuleId::S2111, 10, 10, 6)});
  CHECK(rep.all.tdr->to_string() == "15/20");
  CHECK(rep.all.ftr->to_string() == "10/15");
  CHECK(rep.all.fdr->to_string() == "10/20");
  CHECK_FALSE(rep.all.rule);
  check_identity(rep.all);
}

TEST_CASE("single-rule aggregate equals that rule") {
  auto s = stats_from_counts(RuleId::S4973, 81, 80, 68);
  auto rep = aggregate({s});
  CHECK(rep.all.dv == s.dv);
  CHECK(rep.all.tv == s.tv);
  CHECK(rep.all.fv == s.fv);
  CHECK(*rep.all.tdr == *s.tdr);
  CHECK(*rep.all.fdr == *s.fdr);
  CHECK(rep.all.trt_minutes == s.trt_minutes);
}

TEST_CASE("fv above tv is flagged, not capped; negative fv is clamped") {
  auto s = stats_from_counts(RuleId::S2184, 5, 2, 3);
  CHECK(s.fv == 3);
  CHECK(s.warnings.size() == 1);
  CHECK(s.ftr->to_string() == "3/2");
  auto n = compute_stats(RuleId::S2184, 2, 2, 4);
  CHECK(n.fv == 0);
  CHECK(n.warnings.size() == 1);
}

TEST_CASE("identity holds over every fraction triple of small counts") {
  for (int dv = 0; dv <= 12; ++dv)
    for (int tv = 0; tv <= dv; ++tv)
      for (int fv = 0; fv <= tv; ++fv) check_identity(stats_from_counts(RuleId::S2095, dv, tv, fv));
}

TEST_CASE("report recomputed from serialized violations is identical") {
  std::vector<SerializedViolation> before = {
      {RuleId::S2142, "A.java", true},  {RuleId::S2142, "A.java", true}, {RuleId::S2095, "B.java", false},
      {RuleId::S2095, "B.java", true},  {RuleId::S4973, "C.java", true},
  };
  std::vector<SerializedViolation> after = {{RuleId::S2095, "B.java", false}};
  auto rules = std::set<RuleId>{RuleId::S2142, RuleId::S2095, RuleId::S4973};
  auto rep = report_from_violations(rules, before, after);
  REQUIRE(rep.rules.size() == 3);
  CHECK(rep.all.dv == 5);
  CHECK(rep.all.tv == 4);
  CHECK(rep.all.fv == 4);

  Json b = Json::array(), a = Json::array();
  for (const auto& v : before)
    b.push_back({{"rule", std::string(rule_key(v.rule))}, {"path", v.path}, {"target", v.target}});
  for (const auto& v : after)
    a.push_back({{"rule", std::string(rule_key(v.rule))}, {"path", v.path}, {"target", v.target}});
  auto again = report_from_violations(rules, violations_from_json(b), violations_from_json(a));
  CHECK(report_json(again).dump() == report_json(rep).dump());
  CHECK_THROWS(violations_from_json(Json::object()));
}

TEST_CASE("table rendering") {
  std::vector<RuleStats> stats;
  for (const auto& r : kTable3) stats.push_back(stats_from_counts(r.rule, r.dv, r.tv, r.fv));
  auto text = render_table(aggregate(stats));
  CHECK(text.find("95% (300/315)") != std::string::npos);
  CHECK(text.find("74% (1307/1759)") != std::string::npos);
  CHECK(text.find("7340") != std::string::npos);
}
