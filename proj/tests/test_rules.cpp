#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "jrepair/pipeline.hpp"

using namespace jrepair;
namespace fs = std::filesystem;

namespace {

std::vector<Violation> detect_text(const std::string& text, std::set<RuleId> rules) {
  auto tree = testutil::parse_text(text);
  auto scopes = build_scopes(tree);
  return detect_all(tree, scopes, rules);
}

std::size_t count(const std::string& text, RuleId rule) { return detect_text(text, {rule}).size(); }

std::string wrap_method(const std::string& body, const std::string& members = "") {
  return "import java.util.*;\nclass T {\n" + members + "    void m() {\n" + body + "    }\n}\n";
}

}  // namespace

TEST_CASE("rule table") {
  CHECK(all_rules().size() == 10);
  std::map<std::string_view, int> minutes;
  for (const auto& r : all_rules()) minutes[r.key] = r.remediation_minutes;
  CHECK(minutes["S1217"] == 20);
  CHECK(minutes["S1860"] == 15);
  CHECK(minutes["S2142"] == 15);
  for (auto k : {"S2095", "S2111", "S2116", "S2184", "S2225", "S2272", "S4973"}) CHECK(minutes[k] == 5);
  CHECK(parse_rule_id("S2142") == RuleId::S2142);
  CHECK_FALSE(parse_rule_id("S9999"));
  CHECK(all_rule_ids().size() == 10);
}

TEST_CASE("Listing 1 yields one S1217 violation at myThread.run()") {
  auto tree = parse(testutil::load_as(testutil::fixtures() / "rules/S1217/pos_01.java", "L1.java"));
  auto scopes = build_scopes(tree);
  auto vs = detect(tree, scopes, RuleId::S1217);
  REQUIRE(vs.size() == 1);
  CHECK(tree.kind(vs[0].anchor) == NodeKind::MethodInvocation);
  CHECK(tree.text(vs[0].anchor) == "myThread.run()");
  CHECK(vs[0].message.find("S1217") != std::string::npos);
}

TEST_CASE("violation-free file and empty rule set give no violations") {
  auto clean = testutil::slurp(testutil::fixtures() / "roundtrip/r19_threads_ok.java");
  CHECK(detect_text(clean, all_rule_ids()).empty());
  CHECK(detect_text(wrap_method("        Thread t = new Thread();\n        t.run();\n"), {}).empty());
}

TEST_CASE("two string comparisons and a null check give two S4973 violations") {
  auto text = wrap_method(
      "        String s = name(), t = name();\n"
      "        if (s == t) {}\n"
      "        if (s != \"x\") {}\n"
      "        if (s == null) {}\n",
      "    String name() { return \"n\"; }\n");
  CHECK(count(text, RuleId::S4973) == 2);
}

TEST_CASE("detect_all is the span-ordered union of detect") {
  auto text = wrap_method(
      "        int[] arr = {1};\n"
      "        String a = \"p\", b = \"q\";\n"
      "        boolean same = a == b;\n"
      "        String s = arr.toString();\n");
  auto tree = testutil::parse_text(text);
  auto scopes = build_scopes(tree);
  auto all = detect_all(tree, scopes, {RuleId::S2116, RuleId::S4973});
  REQUIRE(all.size() == 2);
  CHECK(all[0].rule == RuleId::S4973);
  CHECK(all[1].rule == RuleId::S2116);
  CHECK(all[0].span.start < all[1].span.start);
  auto a = detect(tree, scopes, RuleId::S4973), b = detect(tree, scopes, RuleId::S2116);
  CHECK(all[0].span == a.at(0).span);
  CHECK(all[1].span == b.at(0).span);
  // determinism
  auto again = detect_all(testutil::parse_text(text), build_scopes(testutil::parse_text(text)), {RuleId::S2116, RuleId::S4973});
  REQUIRE(again.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(again[i].span == all[i].span);
    CHECK(again[i].message == all[i].message);
  }
}

TEST_CASE("violations starting at the same offset are ordered by rule id") {
  // the S2116 call and the S2184 product both start at `arr`
  auto text = wrap_method("        int[] arr = {1};\n        int k = 7;\n        long x = arr.hashCode() * k;\n");
  auto vs = detect_text(text, all_rule_ids());
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].span.start == vs[1].span.start);
  CHECK(vs[0].rule == RuleId::S2116);
  CHECK(vs[1].rule == RuleId::S2184);
}

TEST_CASE("S2225 split: toString targeted, clone excluded") {
  auto tree = parse(testutil::load_as(testutil::fixtures() / "rules/S2225/split_01.java", "Split.java"));
  auto scopes = build_scopes(tree);
  auto vs = detect(tree, scopes, RuleId::S2225);
  REQUIRE(vs.size() == 2);
  auto in_clone = check_assumptions(vs[0], tree, scopes);
  auto in_to_string = check_assumptions(vs[1], tree, scopes);
  CHECK_FALSE(in_clone.target);
  CHECK(in_clone.exclusion_reason == "clone not amenable to template repair");
  CHECK(in_to_string.target);
}

TEST_CASE("S2095 resource inside an argument expression is excluded") {
  auto text = wrap_method("        consume(new java.io.FileInputStream(\"f\"));\n",
                          "    void consume(java.io.InputStream in) {}\n");
  auto tree = testutil::parse_text(text);
  auto scopes = build_scopes(tree);
  auto vs = detect(tree, scopes, RuleId::S2095);
  REQUIRE(vs.size() == 1);
  auto st = check_assumptions(vs[0], tree, scopes);
  CHECK_FALSE(st.target);
  CHECK(st.exclusion_reason == "no enclosing statement to wrap");
}

TEST_CASE("unknown type evidence suppresses detection") {
  CHECK(count(wrap_method("        Thread t = new Thread();\n        t.run();\n"), RuleId::S1217) == 1);
  CHECK(count(wrap_method("        var t = factory.make();\n        t.run();\n"), RuleId::S1217) == 0);

  CHECK(count(wrap_method("        int[] a = {1};\n        a.hashCode();\n"), RuleId::S2116) == 1);
  CHECK(count(wrap_method("        var a = lookup();\n        a.hashCode();\n"), RuleId::S2116) == 0);

  CHECK(count(wrap_method("        String s = \"a\", u = \"b\";\n        boolean b = s == u;\n"), RuleId::S4973) == 1);
  CHECK(count(wrap_method("        String s = \"a\";\n        boolean b = s == other.get();\n"), RuleId::S4973) == 0);

  CHECK(count(wrap_method("        java.math.BigDecimal d = new java.math.BigDecimal(0.1);\n"), RuleId::S2111) == 1);
  CHECK(count(wrap_method("        java.math.BigDecimal d = new java.math.BigDecimal(cfg.value());\n"), RuleId::S2111) == 0);

  CHECK(count(wrap_method("        int a = 1, b = 2;\n        long x = a * b;\n"), RuleId::S2184) == 1);
  CHECK(count(wrap_method("        int a = 1;\n        long x = a * q.size();\n"), RuleId::S2184) == 0);
}

TEST_CASE("fixture corpus invariants") {
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(testutil::fixtures())) {
    auto name = e.path().filename().string();
    if (!name.ends_with(".java") || e.path().string().find("/roundtrip/") != std::string::npos) continue;
    CAPTURE(e.path());
    auto file = std::make_shared<SourceFile>(SourceFile::load(e.path()));
    auto tree = parse(file);
    auto scopes = build_scopes(tree);
    auto recs = analyze(tree, scopes, all_rule_ids());
    std::map<RuleId, std::pair<int, int>> dv_tv;
    std::set<std::tuple<RuleId, std::uint32_t, std::uint32_t>> seen;
    for (const auto& r : recs) {
      const auto& v = r.violation;
      auto& c = dv_tv[v.rule];
      ++c.first;
      c.second += r.status.target;
      if (!r.status.target) CHECK_FALSE(r.status.exclusion_reason.empty());
      CHECK(v.span.end <= file->text.size());
      CHECK(tree.span(v.anchor).start <= v.span.start);
      CHECK(v.span.end <= tree.span(v.anchor).end);
      CHECK(v.message.find(rule_key(v.rule)) != std::string::npos);
      CHECK(seen.insert({v.rule, v.span.start, v.span.end}).second);
    }
    for (auto& [rule, c] : dv_tv) CHECK(c.second <= c.first);
    ++files;
  }
  CHECK(files > 100);
}
