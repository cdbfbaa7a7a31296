#include "doctest.h"
#include "helpers.hpp"
#include "jrepair/type_hints.hpp"

using namespace jrepair;
using testutil::find_node;
using testutil::parse_text;

namespace {

struct Typed {
  SyntaxTree tree;
  ScopeTable scopes;
  explicit Typed(const std::string& src) : tree(parse_text(src)), scopes(build_scopes(tree)) {}
  TypeHint of(std::string_view text) {
    NodeId found = kNoNode;
    tree.walk(tree.root, [&](NodeId id) {
      if (found == kNoNode && is_expression(tree.kind(id)) && tree.text(id) == text) found = id;
      return found == kNoNode;
    });
    REQUIRE_MESSAGE(found != kNoNode, text);
    return expr_type(found, scopes);
  }
};

std::string wrap(const std::string& body, const std::string& members = "") {
  return "class A {\n" + members + "  void m(int a, long b, String s, Integer i1, int[] arr) {\n" + body +
         "\n  }\n}\n";
}

}  // namespace

TEST_CASE("scopes record declared hints") {
  Typed t(wrap("    Thread t = new Thread(r);\n    var x = foo();\n    t.run();\n    x.run();"));
  CHECK(t.of("t").is_known("java.lang.Thread"));
  CHECK(t.of("x").is_unknown());
  Typed empty("class E { }");
  CHECK(empty.scopes.local_count() == 0);
  CHECK(empty.scopes.classes().size() == 1);
  CHECK(empty.scopes.classes().front().fields.empty());
}

TEST_CASE("literal and arithmetic typing") {
  Typed t(wrap("    long v = 24 * 60 * 60;\n    Object o = a * b;\n    Object q = \"abc\";\n"
               "    Object d = 2.5;\n    Object g = i1;\n    Object c = s + a;\n    Object e = arr[0];\n    Object f = a / 2.0f;"));
  CHECK(t.of("24 * 60 * 60").is_primitive(Prim::Int));
  CHECK(t.of("\"abc\"").is_string());
  CHECK(t.of("2.5").is_primitive(Prim::Double));
  CHECK(t.of("a * b").is_primitive(Prim::Long));
  CHECK(t.of("s + a").is_string());
  CHECK(t.of("arr[0]").is_primitive(Prim::Int));
  CHECK(t.of("arr").is_array());
  CHECK(t.of("arr").element().is_primitive(Prim::Int));
  CHECK(t.of("a / 2.0f").is_primitive(Prim::Float));
  CHECK(t.of("i1").is_boxed());
}

// Java binary numeric promotion: the wider of the two operand kinds, at least int.
TEST_CASE("numeric promotion table") {
  const Prim order[] = {Prim::Byte, Prim::Short, Prim::Char, Prim::Int, Prim::Long, Prim::Float, Prim::Double};
  auto rank = [](Prim p) {
    switch (p) {
      case Prim::Long: return 1;
      case Prim::Float: return 2;
      case Prim::Double: return 3;
      default: return 0;
    }
  };
  const Prim by_rank[] = {Prim::Int, Prim::Long, Prim::Float, Prim::Double};
  for (auto x : order)
    for (auto y : order) {
      auto expected = by_rank[std::max(rank(x), rank(y))];
      CHECK(numeric_promotion(TypeHint::primitive(x), TypeHint::primitive(y)) == TypeHint::primitive(expected));
    }
  CHECK(numeric_promotion(TypeHint::boxed("Integer"), TypeHint::primitive(Prim::Long)).is_primitive(Prim::Long));
  CHECK(numeric_promotion(TypeHint::unknown(), TypeHint::primitive(Prim::Int)).is_unknown());
  CHECK(numeric_promotion(TypeHint::primitive(Prim::Boolean), TypeHint::primitive(Prim::Int)).is_unknown());
}

TEST_CASE("unknown is absorbing and degradation is monotone") {
  Typed t(wrap("    Object o = a * b + 1;\n    Object p = a * foo() + 1;\n    Object q = s + foo();"));
  CHECK(t.of("a * b + 1").is_primitive(Prim::Long));
  CHECK(t.of("a * foo() + 1").is_unknown());
  CHECK(t.of("s + foo()").is_unknown());
}

TEST_CASE("scopes shadow and respect declaration order") {
  Typed t(
      "class A {\n  String x;\n  void m() {\n    x.length();\n    int x = 1;\n    x++;\n"
      "    { long x2 = 2; }\n    x2.foo();\n  }\n}\n");
  CHECK(t.of("x.length()").is_primitive(Prim::Int));
  CHECK(t.of("x++").is_primitive(Prim::Int));
  CHECK(t.of("x2").is_unknown());
}

TEST_CASE("jdk table and file classes") {
  Typed t(
      "class Worker extends Thread { String label() { return \"w\"; } }\n"
      "class Main {\n  Worker w;\n  void m() {\n    Thread.currentThread();\n    w.label();\n    w.getName();\n"
      "    \"x\".substring(1);\n    new java.math.BigDecimal(1);\n    this.w;\n  }\n}\n");
  CHECK(t.of("Thread.currentThread()").is_known("java.lang.Thread"));
  CHECK(t.of("w.label()").is_string());
  CHECK(t.of("w.getName()").is_string());
  CHECK(t.of("\"x\".substring(1)").is_string());
  CHECK(t.of("new java.math.BigDecimal(1)").is_known("java.math.BigDecimal"));
  CHECK(t.of("this.w") == TypeHint::user("Worker"));
  CHECK(t.scopes.is_subtype_of(TypeHint::user("Worker"), "java.lang.Thread"));
  CHECK_FALSE(t.scopes.is_subtype_of(TypeHint::user("Main"), "java.lang.Thread"));
}

TEST_CASE("type table data is extensible") {
  TypeTable table;
  table.load("class com.acme.Pool\nmethod com.acme.Pool name java.lang.String\n");
  CHECK(table.qualify("Pool") == "com.acme.Pool");
  CHECK(table.method_return("com.acme.Pool", "name") == "java.lang.String");
  CHECK_THROWS(table.load("bogus line here\n"));
  CHECK(TypeTable::builtin()->is_closeable("java.io.FileInputStream"));
  CHECK_FALSE(TypeTable::builtin()->is_closeable("java.util.Scanner"));
}
