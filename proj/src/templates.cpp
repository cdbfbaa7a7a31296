#include "jrepair/templates.hpp"

#include <algorithm>
#include <cctype>

namespace jrepair {

namespace {

// Staleness and target checks shared by every template.
void require_target(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes, RuleId rule) {
  if (v.rule != rule) throw NotTarget("violation belongs to " + std::string(rule_key(v.rule)));
  if (v.source_digest != text_digest(tree.file_text()) || v.anchor >= tree.size() ||
      tree.kind(v.anchor) != v.anchor_kind || !(tree.span(v.anchor) == v.span))
    throw StaleAnchor(std::string(rule_key(rule)) + ": anchor does not match the current tree");
  if (!violates(tree, scopes, rule, v.anchor)) throw NotTarget("not a violation");
  auto status = check_assumptions(v, tree, scopes);
  if (!status.target) throw NotTarget(status.exclusion_reason);
}

FixPlan plan_for(const Violation& v) {
  FixPlan p;
  p.violation = v;
  p.rule = v.rule;
  return p;
}

Payload text(std::string_view s) {
  Payload p;
  p.text(s);
  return p;
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

struct ImportEntry {
  std::string name;  // qualified name, ".*" kept for wildcards
  bool is_static = false;
};

std::vector<ImportEntry> imports_of(const SyntaxTree& tree) {
  std::vector<ImportEntry> out;
  for (auto c : tree.node(tree.root).children) {
    if (tree.kind(c) != NodeKind::ImportDecl) continue;
    ImportEntry e;
    for (auto t : tree.node(c).children) {
      auto s = tree.text(t);
      if (s == "import" || s == ";") continue;
      if (s == "static") {
        e.is_static = true;
        continue;
      }
      e.name += s;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string simple_of(std::string_view qualified) {
  auto dot = qualified.rfind('.');
  return std::string(dot == qualified.npos ? qualified : qualified.substr(dot + 1));
}

// Names a class declares or sees as fields and locals, for collision checks.
bool name_taken(const SyntaxTree& tree, const ClassInfo& cls, const std::string& name) {
  return cls.fields.count(name) > 0 || cls.methods.count(name) > 0 || references_name(tree, cls.body, name);
}

std::string fresh_name(const SyntaxTree& tree, const ClassInfo& cls, const std::string& base,
                       const std::string& companion_prefix = {}) {
  auto taken = [&](const std::string& n) {
    return name_taken(tree, cls, n) || (!companion_prefix.empty() && name_taken(tree, cls, companion_prefix + capitalized(n)));
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    auto n = base + std::to_string(i);
    if (!taken(n)) return n;
  }
}

std::vector<NodeId> members_of(const SyntaxTree& tree, NodeId body) {
  std::vector<NodeId> out;
  for (auto c : tree.node(body).children)
    if (!tree.is_token(c)) out.push_back(c);
  return out;
}

bool is_primary(NodeKind k) {
  switch (k) {
    case NodeKind::Name:
    case NodeKind::Literal:
    case NodeKind::FieldAccess:
    case NodeKind::MethodInvocation:
    case NodeKind::ArrayAccess:
    case NodeKind::Parens:
    case NodeKind::This:
    case NodeKind::ClassLiteral: return true;
    default: return false;
  }
}

// Decimal integer literal without a type suffix, e.g. 24 or 1_000.
bool decimal_int_literal(const SyntaxTree& tree, NodeId e) {
  if (tree.kind(e) != NodeKind::Literal) return false;
  if (tree.token_of(tree.node(e).children.front()).kind != TokenKind::IntLiteral) return false;
  auto t = tree.text(e);
  return t == "0" || (t.size() > 0 && t[0] != '0');
}

}  // namespace

TypeReference reference_jdk_class(const SyntaxTree& tree, const ScopeTable& scopes, const std::string& qualified) {
  auto simple = simple_of(qualified);
  auto package = qualified.substr(0, qualified.size() - simple.size() - 1);
  bool imported = false;
  bool clash = scopes.class_named(simple) != nullptr;
  for (const auto& imp : imports_of(tree)) {
    if (imp.is_static) continue;
    if (imp.name == qualified || imp.name == package + ".*") imported = true;
    else if (simple_of(imp.name) == simple) clash = true;
  }
  if (clash && !imported) return {qualified, {}};
  if (imported || package == "java.lang") return {simple, {}};
  return {simple, qualified};
}

FixPlan fix_S1217(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S1217);
  auto plan = plan_for(v);
  plan.edits.push_back(TreeEdit::replace(invocation_parts(tree, v.anchor).name, text("start")));
  return plan;
}

FixPlan fix_S1860(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S1860);
  auto plan = plan_for(v);
  const ClassInfo* owner = nullptr;
  std::string field;
  if (const auto* info = designated_field(tree, scopes, v.anchor, &owner, &field)) {
    auto lock = fresh_name(tree, *owner, "lock" + capitalized(field));
    // a superclass field: the subclass cannot see a private lock
    bool lexical = tree.is_ancestor(owner->body, v.anchor);
    std::string decl = std::string(lexical ? "private " : "protected ") + (info->is_static ? "static " : "") +
                       "final Object " + lock + " = new Object();";
    auto field_decl = tree.node(info->declarator).parent;
    auto add = TreeEdit::insert_after(field_decl, text(decl), EditKind::AddField);
    add.key = "field:" + std::to_string(owner->body) + ":" + lock;
    plan.edits.push_back(add);
    plan.edits.push_back(TreeEdit::replace(v.anchor, text(lock)));
    return plan;
  }

  // receiver.getX(): the lock lives in the receiver's class, behind a getter
  auto inv = strip_parens(tree, v.anchor);
  auto parts = invocation_parts(tree, inv);
  auto hint = expr_type(parts.receiver, scopes);
  const ClassInfo* target = scopes.class_named(hint.name);
  auto property = std::string(tree.text(parts.name).substr(3));
  auto lock = fresh_name(tree, *target, "lock" + capitalized(property), "get");
  auto getter = "get" + capitalized(lock);
  auto members = members_of(tree, target->body);
  NodeId last_field = kNoNode;
  for (auto m : members)
    if (tree.kind(m) == NodeKind::FieldDecl) last_field = m;

  auto field_payload = text("private final Object " + lock + " = new Object();");
  TreeEdit add_field;
  if (last_field != kNoNode) {
    add_field = TreeEdit::insert_after(last_field, field_payload, EditKind::AddField);
  } else if (!members.empty()) {
    add_field = TreeEdit::insert_before(members.front(), field_payload, EditKind::AddField);
  } else {
    add_field = TreeEdit::block_start(target->body, field_payload, EditKind::AddField);
  }
  add_field.key = "field:" + std::to_string(target->body) + ":" + lock;

  Payload method;
  method.newline().text("public Object " + getter + "() {").newline().indent().text("return " + lock + ";").dedent().newline().text("}");
  TreeEdit add_method = members.empty() ? TreeEdit::block_start(target->body, method, EditKind::AddMethod)
                                        : TreeEdit::insert_after(members.back(), method, EditKind::AddMethod);
  add_method.key = "method:" + std::to_string(target->body) + ":" + getter;

  plan.edits.push_back(add_field);
  plan.edits.push_back(add_method);
  plan.edits.push_back(TreeEdit::replace(parts.name, text(getter)));
  return plan;
}

FixPlan fix_S2095(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2095);
  auto plan = plan_for(v);
  auto declarator = resource_declarator(tree, v.anchor);
  auto decl = tree.node(declarator).parent;
  auto block = tree.node(decl).parent;
  auto n = static_cast<std::uint32_t>(tree.node(decl).children.size());
  auto stmts = block_statements(tree, block);

  // first statement of a plain try: turn that try into try-with-resources
  auto owner = tree.node(block).parent;
  if (owner != kNoNode && tree.kind(owner) == NodeKind::TryStmt && tree.child(owner, NodeKind::Block) == block &&
      tree.child(owner, NodeKind::ResourceSpec) == kNoNode && stmts.front() == decl) {
    Payload spec;
    spec.text(" (").ref_children(decl, 0, n - 1).text(")");
    plan.edits.push_back(TreeEdit::inline_after(tree.child_token(owner, "try"), spec));
    plan.edits.push_back(TreeEdit::remove(decl));
    return plan;
  }

  auto [first, last] = resource_extent(tree, block, decl, declared_name(tree, declarator));
  Payload header;
  header.text("try (").ref_children(decl, 0, n - 1).text(") {");
  plan.edits.push_back(TreeEdit::wrap(stmts[first], stmts[last], header));
  return plan;
}

FixPlan fix_S2111(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2111);
  auto plan = plan_for(v);
  auto args = argument_list(tree, tree.child(v.anchor, NodeKind::Arguments));
  if (args.size() == 1) {
    Payload p;
    p.text(type_text(tree, tree.child(v.anchor, NodeKind::Type)) + ".valueOf(").ref(args.front()).text(")");
    plan.edits.push_back(TreeEdit::replace(v.anchor, p));
    return plan;
  }
  // quote the literal: 2.5 -> "2.5", -1_000.0d -> "-1000.0"
  std::string literal;
  auto raw = std::string(tree.text(args.front()));
  for (char c : raw) {
    if (c == '_' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    literal += c;
  }
  if (!literal.empty() && std::string_view("fFdD").find(literal.back()) != std::string_view::npos) literal.pop_back();
  plan.edits.push_back(TreeEdit::replace(args.front(), text("\"" + literal + "\"")));
  return plan;
}

FixPlan fix_S2116(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2116);
  auto plan = plan_for(v);
  auto parts = invocation_parts(tree, v.anchor);
  auto ref = reference_jdk_class(tree, scopes, "java.util.Arrays");
  Payload p;
  p.text(ref.spelling + "." + std::string(tree.text(parts.name)) + "(").ref(parts.receiver).text(")");
  plan.edits.push_back(TreeEdit::replace(v.anchor, p));
  if (!ref.import.empty()) plan.edits.push_back(TreeEdit::add_import(ref.import));
  return plan;
}

FixPlan fix_S2142(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2142);
  auto plan = plan_for(v);
  auto block = tree.child(v.anchor, NodeKind::Block);
  auto stmts = block_statements(tree, block);
  auto payload = text("Thread.currentThread().interrupt();");
  if (stmts.empty()) {
    plan.edits.push_back(TreeEdit::block_start(block, payload));
    return plan;
  }
  auto k = tree.kind(stmts.back());
  // the interrupt must run before control leaves the handler
  if (k == NodeKind::ReturnStmt || k == NodeKind::BreakStmt || k == NodeKind::ContinueStmt) {
    plan.edits.push_back(TreeEdit::insert_before(stmts.back(), payload));
  } else {
    plan.edits.push_back(TreeEdit::insert_after(stmts.back(), payload));
  }
  return plan;
}

FixPlan fix_S2184(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2184);
  auto plan = plan_for(v);
  auto target = leftmost_operand(tree, v.anchor);
  auto prim = context_type(tree, scopes, v.anchor).prim;
  if (decimal_int_literal(tree, target)) {
    auto suffix = prim == Prim::Long ? "L" : prim == Prim::Float ? "f" : "d";
    plan.edits.push_back(TreeEdit::replace(target, text(std::string(tree.text(target)) + suffix)));
    return plan;
  }
  Payload p;
  p.text("(" + std::string(prim_name(prim)) + ") ").ref(target);
  plan.edits.push_back(TreeEdit::replace(target, p));
  return plan;
}

FixPlan fix_S2225(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2225);
  auto plan = plan_for(v);
  auto expr = expression_children(tree, v.anchor).front();
  plan.edits.push_back(TreeEdit::replace(expr, text("\"\"")));
  return plan;
}

FixPlan fix_S2272(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S2272);
  auto plan = plan_for(v);
  auto body = tree.child(v.anchor, NodeKind::Block);
  auto ref = reference_jdk_class(tree, scopes, "java.util.NoSuchElementException");
  Payload guard;
  guard.text("if (!hasNext()) {").newline().indent().text("throw new " + ref.spelling + "();").dedent().newline().text("}");
  auto stmts = block_statements(tree, body);
  plan.edits.push_back(stmts.empty() ? TreeEdit::block_start(body, guard) : TreeEdit::insert_before(stmts.front(), guard));
  if (!ref.import.empty()) plan.edits.push_back(TreeEdit::add_import(ref.import));
  return plan;
}

FixPlan fix_S4973(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  require_target(v, tree, scopes, RuleId::S4973);
  auto plan = plan_for(v);
  auto parts = binary_parts(tree, v.anchor);
  Payload p;
  if (parts.op == "!=") p.text("!");
  if (is_primary(tree.kind(parts.left))) {
    p.ref(parts.left);
  } else {
    p.text("(").ref(parts.left).text(")");
  }
  p.text(".equals(").ref(parts.right).text(")");
  plan.edits.push_back(TreeEdit::replace(v.anchor, p));
  return plan;
}

FixPlan fix(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  switch (v.rule) {
    case RuleId::S1217: return fix_S1217(v, tree, scopes);
    case RuleId::S1860: return fix_S1860(v, tree, scopes);
    case RuleId::S2095: return fix_S2095(v, tree, scopes);
    case RuleId::S2111: return fix_S2111(v, tree, scopes);
    case RuleId::S2116: return fix_S2116(v, tree, scopes);
    case RuleId::S2142: return fix_S2142(v, tree, scopes);
    case RuleId::S2184: return fix_S2184(v, tree, scopes);
    case RuleId::S2225: return fix_S2225(v, tree, scopes);
    case RuleId::S2272: return fix_S2272(v, tree, scopes);
    case RuleId::S4973: return fix_S4973(v, tree, scopes);
  }
  throw NotTarget("unknown rule");
}

}  // namespace jrepair
