#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "jrepair/lexer.hpp"

using namespace jrepair;
using testutil::find_node;
using testutil::parse_text;

namespace {

std::vector<std::string> lexemes(const std::string& text, bool significant_only) {
  auto f = SourceFile::from_text("T.java", text);
  std::vector<std::string> out;
  for (const auto& t : tokenize(f))
    if (!significant_only || !t.documentary()) out.emplace_back(text.substr(t.start, t.end - t.start));
  return out;
}

}  // namespace

TEST_CASE("source file newline detection") {
  auto lf = SourceFile::from_text("a", "a\nb\n");
  CHECK(lf.newline_style == NewlineStyle::LF);
  CHECK(lf.trailing_newline);
  auto crlf = SourceFile::from_text("a", "a\r\nb");
  CHECK(crlf.newline_style == NewlineStyle::CRLF);
  CHECK_FALSE(crlf.trailing_newline);
  CHECK(crlf.newline() == "\r\n");
  auto mixed = SourceFile::from_text("a", "a\r\nb\nc\r\n");
  CHECK(mixed.newline_style == NewlineStyle::Mixed);
  CHECK_THROWS_AS(SourceFile::from_text("a", std::string("\xC0\xAF")), DecodeError);
  CHECK_THROWS_AS(SourceFile::from_text("a", std::string("\xED\xA0\x80")), DecodeError);
  CHECK_NOTHROW(SourceFile::from_text("a", "caf\xC3\xA9"));
}

TEST_CASE("line index positions are 1-based") {
  auto f = SourceFile::from_text("a", "ab\r\ncd\ne");
  auto s = f.lines.span(5, 8);
  CHECK(s.start_line == 2);
  CHECK(s.start_col == 2);
  CHECK(s.end_line == 3);
  CHECK(s.end_col == 2);
}

TEST_CASE("tokenize") {
  CHECK(lexemes("", false).empty());
  auto all = lexemes("int x = 1; // y", false);
  auto sig = lexemes("int x = 1; // y", true);
  CHECK(sig == std::vector<std::string>{"int", "x", "=", "1", ";"});
  CHECK(all.back() == "// y");
  std::string joined;
  for (auto& s : all) joined += s;
  CHECK(joined == "int x = 1; // y");
  CHECK_THROWS_AS(lexemes("String s = \"a", true), LexError);
  CHECK_THROWS_AS(lexemes("/* open", true), LexError);
  CHECK_THROWS_AS(lexemes("int #x;", true), LexError);
  CHECK(lexemes("a>>=b", true) == std::vector<std::string>{"a", ">", ">", "=", "b"});
  CHECK(lexemes("1.e5 0x1.8p3 1_000L .5f 1.", true) ==
        std::vector<std::string>{"1.e5", "0x1.8p3", "1_000L", ".5f", "1."});
}

TEST_CASE("literal token kinds") {
  auto f = SourceFile::from_text("T.java", "2 2L 2.5 2.5f 'c' \"s\"");
  std::vector<TokenKind> kinds;
  for (const auto& t : tokenize(f))
    if (!t.documentary()) kinds.push_back(t.kind);
  CHECK(kinds == std::vector<TokenKind>{TokenKind::IntLiteral, TokenKind::LongLiteral, TokenKind::DoubleLiteral,
                                        TokenKind::FloatLiteral, TokenKind::CharLiteral, TokenKind::StringLiteral});
}

TEST_CASE("minimal compilation unit") {
  auto tree = parse_text("class A {}");
  CHECK(tree.kind(tree.root) == NodeKind::CompilationUnit);
  auto cls = tree.node(tree.root).children.at(0);
  CHECK(tree.kind(cls) == NodeKind::ClassDecl);
  CHECK(tree.text(cls) == "class A {}");
  CHECK(kind_name(tree.kind(cls)) == "class-declaration");
  CHECK_FALSE(check_tree_invariants(tree).has_value());
}

TEST_CASE("method invocation in thread snippet") {
  const std::string src =
      "class Main {\n"
      "  void f(Runnable runnable) {\n"
      "    Thread myThread = new Thread(runnable);\n"
      "    myThread.run();\n"
      "  }\n"
      "}\n";
  auto tree = parse_text(src);
  auto inv = find_node(tree, NodeKind::MethodInvocation, "myThread.run()");
  REQUIRE(inv != kNoNode);
  CHECK(kind_name(tree.kind(inv)) == "method-invocation");
  auto run = static_cast<std::uint32_t>(src.find("run()"));
  CHECK(node_at(tree, run, run + 3) == inv);
  auto parts = invocation_parts(tree, inv);
  CHECK(tree.text(parts.name) == "run");
  CHECK(tree.text(parts.receiver) == "myThread");
  CHECK(find_node(tree, NodeKind::LocalVarDecl, "Thread myThread = new Thread(runnable);") != kNoNode);
  CHECK(find_node(tree, NodeKind::ObjectCreation, "new Thread(runnable)") != kNoNode);
}

TEST_CASE("node_at") {
  const std::string src = "class A {\n  void f() {\n    int a = 1;\n    int b = 2;\n  }\n}\n";
  auto tree = parse_text(src);
  CHECK(node_at(tree, 0, 0) == tree.root);
  auto s = static_cast<std::uint32_t>(src.find("int a"));
  auto e = static_cast<std::uint32_t>(src.find("2;") + 2);
  auto block = node_at(tree, s, e);
  CHECK(tree.kind(block) == NodeKind::Block);
  CHECK_THROWS_AS(node_at(tree, 0, static_cast<std::uint32_t>(src.size() + 1)), NotFound);
  // every node that does not share its span with a child maps to itself
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (tree.is_token(id)) continue;
    const auto& n = tree.node(id);
    bool shares = std::any_of(n.children.begin(), n.children.end(), [&](NodeId c) {
      return !tree.is_token(c) && tree.node(c).start == n.start && tree.node(c).end == n.end;
    });
    if (!shares && n.end > n.start) CHECK(node_at(tree, n.start, n.end) == id);
  }
}

TEST_CASE("unsupported declarations are verbatim and reprint exactly") {
  const std::string src =
      "package p;\n\n"
      "record Point(int x, int y) {}\n"
      "sealed interface Shape permits Circle {}\n"
      "class C {\n"
      "  int f(Object o) { return switch (o) { case 1 -> 2; default -> 3; }; }\n"
      "  void g() {}\n"
      "}\n";
  auto tree = parse_text(src);
  CHECK(reconstruct_from_leaves(tree) == src);
  CHECK_FALSE(check_tree_invariants(tree).has_value());
  int verbatim = 0;
  tree.walk(tree.root, [&](NodeId id) {
    if (tree.kind(id) == NodeKind::Verbatim) ++verbatim;
    return true;
  });
  CHECK(verbatim >= 3);
  CHECK(find_node(tree, NodeKind::MethodDecl, "void g() {}") != kNoNode);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_text("class A { void f( }", false), ParseError);
  auto tree = parse_text("class A { void f( }\n void g() { int x = 1; } }");
  CHECK(reconstruct_from_leaves(tree) == "class A { void f( }\n void g() { int x = 1; } }");
  try {
    parse_text("class A { int x = ; }", false);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK_FALSE(e.expected.empty());
    CHECK(e.span.start_line == 1);
  }
}

TEST_CASE("expressions") {
  auto tree = parse_text(
      "class A { void f() {\n"
      "  long x = 24 * 60 * 60;\n"
      "  int y = a >> 2 >>> 1;\n"
      "  y >>= 3;\n"
      "  List<List<String>> l = new ArrayList<>();\n"
      "  boolean b = a < c && d > e;\n"
      "  Object o = (String) s + (int) 3;\n"
      "  Runnable r = () -> { run(); };\n"
      "  java.util.function.Function<Integer, Integer> g = v -> v + 1;\n"
      "  int[] arr = new int[] {1, 2};\n"
      "  String t = b ? \"x\" : \"y\";\n"
      "  if (o instanceof String) return;\n"
      "  for (int i = 0; i < 10; i++) {}\n"
      "  for (String q : list) {}\n"
      "  label: while (true) break label;\n"
      "  Class<?> k = int[].class;\n"
      "}}\n");
  CHECK_FALSE(check_tree_invariants(tree).has_value());
  auto bin = find_node(tree, NodeKind::Binary, "24 * 60 * 60");
  REQUIRE(bin != kNoNode);
  auto parts = binary_parts(tree, bin);
  CHECK(parts.op == "*");
  CHECK(tree.text(parts.left) == "24 * 60");
  CHECK(binary_parts(tree, find_node(tree, NodeKind::Binary, "a >> 2 >>> 1")).op == ">>>");
  CHECK(operator_text(tree, find_node(tree, NodeKind::Assignment, "y >>= 3")) == ">>=");
  CHECK(find_node(tree, NodeKind::Cast, "(String) s") != kNoNode);
  CHECK(find_node(tree, NodeKind::Lambda, "() -> { run(); }") != kNoNode);
  CHECK(find_node(tree, NodeKind::Lambda, "v -> v + 1") != kNoNode);
  CHECK(find_node(tree, NodeKind::ArrayCreation, "new int[] {1, 2}") != kNoNode);
  CHECK(find_node(tree, NodeKind::Conditional, "b ? \"x\" : \"y\"") != kNoNode);
  CHECK(find_node(tree, NodeKind::ForEachStmt, "for (String q : list) {}") != kNoNode);
  CHECK(find_node(tree, NodeKind::Binary, "a < c && d > e") != kNoNode);
  int verbatim = 0;
  tree.walk(tree.root, [&](NodeId id) {
    if (tree.kind(id) == NodeKind::Verbatim && !tree.ancestor(id, NodeKind::Lambda)) ++verbatim;
    return true;
  });
  CHECK(verbatim == 0);
}

TEST_CASE("statements and declarations") {
  const std::string src =
      "package a.b;\n"
      "import java.util.*;\n"
      "import static java.lang.Math.max;\n"
      "@SuppressWarnings(\"x\")\n"
      "public final class A<T extends Comparable<T>> extends B implements C, D<T> {\n"
      "  private static final int X = 1, Y[] = {2};\n"
      "  static { init(); }\n"
      "  A() { super(); }\n"
      "  @Override public String toString() { return null; }\n"
      "  <R> R map() throws java.io.IOException { return null; }\n"
      "  enum E { P(1) { }, Q; E(int i) {} E() {} }\n"
      "  interface I { void m(); default void n() {} }\n"
      "  void t() throws Exception {\n"
      "    try (FileInputStream in = new FileInputStream(f); out) { } catch (IOException | RuntimeException e) { } finally { }\n"
      "    synchronized (this) { }\n"
      "    switch (x) { case 1: case 2: f(); break; default: }\n"
      "    do { } while (false);\n"
      "    class Local { }\n"
      "    assert x > 0 : \"m\";\n"
      "    final var v = new Object() { int k; };\n"
      "    throw new IllegalStateException();\n"
      "  }\n"
      "}\n";
  auto tree = parse_text(src, false);
  CHECK_FALSE(check_tree_invariants(tree).has_value());
  CHECK(reconstruct_from_leaves(tree) == src);
  CHECK(find_node(tree, NodeKind::ImportDecl, "import java.util.*;") != kNoNode);
  auto ts = find_node(tree, NodeKind::MethodDecl, "@Override public String toString() { return null; }");
  REQUIRE(ts != kNoNode);
  CHECK(declared_name(tree, ts) == "toString");
  CHECK(has_modifier(tree, ts, "public"));
  CHECK(find_node(tree, NodeKind::CatchClause, "catch (IOException | RuntimeException e) { }") != kNoNode);
  CHECK(find_node(tree, NodeKind::SyncStmt, "synchronized (this) { }") != kNoNode);
  CHECK(find_node(tree, NodeKind::ClassDecl, "class Local { }") != kNoNode);
  CHECK(find_node(tree, NodeKind::ResourceSpec, "(FileInputStream in = new FileInputStream(f); out)") != kNoNode);
}

TEST_CASE("determinism") {
  const std::string src = "class A { int f() { return a.b(c)[0] + 1; } }";
  CHECK(structurally_equal(parse_text(src), parse_text(src)));
}
