#include "jrepair/rules.hpp"

#include <algorithm>

namespace jrepair {

namespace {

constexpr std::array<RuleInfo, 10> kRules = {{
    {RuleId::S1217, "S1217", "Thread.run() should not be called directly.", 20},
    {RuleId::S1860, "S1860", "Synchronization should not be based on Strings or boxed primitives.", 15},
    {RuleId::S2095, "S2095", "Resources should be closed.", 5},
    {RuleId::S2111, "S2111", "BigDecimal(double) should not be used.", 5},
    {RuleId::S2116, "S2116", "hashCode and toString should not be called on array instances.", 5},
    {RuleId::S2142, "S2142", "InterruptedException should not be ignored.", 15},
    {RuleId::S2184, "S2184", "Math operands should be cast before assignment.", 5},
    {RuleId::S2225, "S2225", "toString() and clone() methods should not return null.", 5},
    {RuleId::S2272, "S2272", "Iterator.next() methods should throw NoSuchElementException.", 5},
    {RuleId::S4973, "S4973", "Strings and Boxed types should be compared using equals().", 5},
}};

bool is_callable(NodeKind k) {
  return k == NodeKind::MethodDecl || k == NodeKind::ConstructorDecl || k == NodeKind::Initializer;
}

std::string_view invoked_name(const SyntaxTree& tree, NodeId inv) {
  auto parts = invocation_parts(tree, inv);
  return parts.name == kNoNode ? std::string_view{} : tree.text(parts.name);
}

bool no_args(const SyntaxTree& tree, NodeId inv) {
  return argument_list(tree, invocation_parts(tree, inv).args).empty();
}

bool is_null_literal(const SyntaxTree& tree, NodeId e) {
  e = strip_parens(tree, e);
  return e != kNoNode && tree.kind(e) == NodeKind::Literal && tree.text(e) == "null";
}

bool is_closeable_creation(const SyntaxTree& tree, const ScopeTable& scopes, NodeId creation) {
  if (tree.kind(creation) != NodeKind::ObjectCreation) return false;
  auto h = scopes.type_hint(tree.child(creation, NodeKind::Type));
  return h.category() == HintCategory::KnownClass && scopes.table().is_closeable(h.name);
}

/// Expression inside the parentheses of a synchronized statement.
NodeId sync_expression(const SyntaxTree& tree, NodeId sync) {
  for (auto c : tree.node(sync).children)
    if (is_expression(tree.kind(c))) return c;
  return kNoNode;
}

}  // namespace

// Field designated by `e` (a simple name not shadowed by a local, or this.f).
const FieldInfo* designated_field(const SyntaxTree& tree, const ScopeTable& scopes, NodeId e,
                                  const ClassInfo** owner, std::string* name) {
  e = strip_parens(tree, e);
  if (tree.kind(e) == NodeKind::Name) {
    auto n = tree.text(e);
    if (scopes.lookup_local(n, e)) return nullptr;
    if (name) *name = std::string(n);
    return scopes.lookup_field(n, e, owner);
  }
  if (tree.kind(e) == NodeKind::FieldAccess) {
    const auto& ch = tree.node(e).children;
    if (ch.size() == 3 && tree.kind(ch[0]) == NodeKind::This) {
      auto n = tree.text(ch[2]);
      if (name) *name = std::string(n);
      return scopes.lookup_field(n, e, owner);
    }
  }
  return nullptr;
}

namespace {

bool is_local_name(const SyntaxTree& tree, const ScopeTable& scopes, NodeId e) {
  return tree.kind(e) == NodeKind::Name && scopes.lookup_local(tree.text(e), e) != nullptr;
}

bool nested_class_body(const SyntaxTree& tree, NodeId id) { return tree.kind(id) == NodeKind::ClassBody; }

// Walks `root` without descending into nested class bodies.
void walk_code(const SyntaxTree& tree, NodeId root, const std::function<void(NodeId)>& fn) {
  tree.walk(root, [&](NodeId id) {
    if (id != root && nested_class_body(tree, id)) return false;
    fn(id);
    return true;
  });
}

bool is_arith(const std::string& op) { return op == "+" || op == "-" || op == "*" || op == "/"; }

bool int_or_long(const TypeHint& h) { return h.is_primitive(Prim::Int) || h.is_primitive(Prim::Long); }

int width_rank(Prim p) {
  switch (p) {
    case Prim::Int: return 1;
    case Prim::Long: return 2;
    case Prim::Float: return 3;
    case Prim::Double: return 4;
    default: return 0;
  }
}

struct ArithContext {
  NodeId expr = kNoNode;  // the expression as written (may be parenthesized)
  TypeHint type;
};

// Assignment, initializer, or return context of an expression.
std::optional<ArithContext> context_of(const SyntaxTree& tree, const ScopeTable& scopes, NodeId expr) {
  NodeId top = expr;
  while (tree.node(top).parent != kNoNode && tree.kind(tree.node(top).parent) == NodeKind::Parens)
    top = tree.node(top).parent;
  NodeId p = tree.node(top).parent;
  if (p == kNoNode) return std::nullopt;
  switch (tree.kind(p)) {
    case NodeKind::VarDeclarator: {
      auto decl = tree.node(p).parent;
      if (decl == kNoNode) return std::nullopt;
      auto k = tree.kind(decl);
      if (k != NodeKind::LocalVarDecl && k != NodeKind::FieldDecl) return std::nullopt;
      auto type = tree.child(decl, NodeKind::Type);
      int dims = 0;
      for (auto c : tree.node(p).children)
        if (tree.is_token(c, "[")) ++dims;
      if (tree.text(type) == "var") return ArithContext{top, TypeHint::unknown()};
      return ArithContext{top, TypeHint::array_of(scopes.type_hint(type), dims)};
    }
    case NodeKind::Assignment: {
      if (operator_text(tree, p) != "=") return std::nullopt;
      auto parts = expression_children(tree, p);
      if (parts.size() != 2 || parts[1] != top) return std::nullopt;
      return ArithContext{top, expr_type(parts[0], scopes)};
    }
    case NodeKind::ReturnStmt: {
      for (NodeId a = p; a != kNoNode; a = tree.node(a).parent) {
        if (tree.kind(a) == NodeKind::MethodDecl)
          return ArithContext{top, scopes.type_hint(tree.child(a, NodeKind::Type))};
        if (tree.kind(a) == NodeKind::ClassBody || tree.kind(a) == NodeKind::Lambda) break;
      }
      return ArithContext{top, TypeHint::unknown()};
    }
    default: return std::nullopt;
  }
}

bool contains_kind(const SyntaxTree& tree, NodeId root, NodeKind kind) {
  bool found = false;
  tree.walk(root, [&](NodeId id) {
    if (tree.kind(id) == kind) found = true;
    return !found;
  });
  return found;
}

std::string rule_message(RuleId rule, const SyntaxTree& tree, NodeId anchor) {
  switch (rule) {
    case RuleId::S1217: return "S1217: call \"start()\" instead of \"run()\" on this Thread";
    case RuleId::S1860: return "S1860: synchronize on a dedicated Object lock instead of \"" + std::string(tree.text(anchor)) + "\"";
    case RuleId::S2095: {
      auto t = type_simple_name(tree, tree.child(anchor, NodeKind::Type));
      return "S2095: use try-with-resources or close this \"" + t + "\"";
    }
    case RuleId::S2111: return "S2111: use \"BigDecimal.valueOf\" or a String argument instead of a double";
    case RuleId::S2116: return "S2116: use \"Arrays." + std::string(invoked_name(tree, anchor)) + "(array)\" instead";
    case RuleId::S2142: return "S2142: either re-interrupt this thread or rethrow the \"InterruptedException\"";
    case RuleId::S2184: return "S2184: cast one of the operands of this operation to the assigned type";
    case RuleId::S2225: return "S2225: return an empty string instead of null";
    case RuleId::S2272: return "S2272: add a \"NoSuchElementException\" for iteration beyond the end of the collection";
    case RuleId::S4973: {
      auto op = binary_parts(tree, anchor).op;
      return "S4973: use \"" + std::string(op == "!=" ? "!" : "") + "equals()\" instead of \"" + op + "\"";
    }
  }
  return {};
}

// ---- per-rule predicates; return anchors ----

void detect_s1217(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::MethodInvocation || invoked_name(tree, id) != "run" || !no_args(tree, id)) return;
  auto recv = invocation_parts(tree, id).receiver;
  if (recv == kNoNode) return;
  if (scopes.is_subtype_of(expr_type(recv, scopes), "java.lang.Thread")) out.push_back(id);
}

void detect_s1860(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::SyncStmt) return;
  auto e = sync_expression(tree, id);
  if (e == kNoNode) return;
  auto h = expr_type(e, scopes);
  if (h.is_string() || h.is_boxed()) out.push_back(e);
}

void detect_s2095(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (!is_closeable_creation(tree, scopes, id)) return;
  // part of a try-with-resources header
  for (NodeId a = tree.node(id).parent; a != kNoNode && !is_statement(tree.kind(a)); a = tree.node(a).parent)
    if (tree.kind(a) == NodeKind::Resource) return;
  auto parent = tree.node(id).parent;
  // wrapped by another resource: new BufferedReader(new FileReader(f))
  if (tree.kind(parent) == NodeKind::Arguments) {
    auto outer = tree.node(parent).parent;
    if (is_closeable_creation(tree, scopes, outer)) return;
  }
  if (tree.kind(parent) == NodeKind::ReturnStmt) return;
  auto callable = enclosing_callable(tree, id);
  if (callable == kNoNode) return;  // field initializer
  std::string var;
  if (tree.kind(parent) == NodeKind::Assignment) {
    auto parts = expression_children(tree, parent);
    if (parts.size() == 2 && parts[1] == id) {
      if (!is_local_name(tree, scopes, parts[0])) return;  // stored in a field
      var = std::string(tree.text(parts[0]));
    }
  } else if (tree.kind(parent) == NodeKind::VarDeclarator && tree.kind(tree.node(parent).parent) == NodeKind::LocalVarDecl) {
    var = std::string(declared_name(tree, parent));
  }
  if (!var.empty()) {
    bool closed = false;
    walk_code(tree, callable, [&](NodeId n) {
      if (closed || tree.kind(n) != NodeKind::MethodInvocation || invoked_name(tree, n) != "close") return;
      auto recv = invocation_parts(tree, n).receiver;
      if (recv != kNoNode && tree.kind(recv) == NodeKind::Name && tree.text(recv) == var) closed = true;
    });
    if (closed) return;
  }
  out.push_back(id);
}

bool floating_hint(const TypeHint& h) { return h.is_primitive(Prim::Double) || h.is_primitive(Prim::Float); }

void detect_s2111(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::ObjectCreation || tree.child(id, NodeKind::ClassBody) != kNoNode) return;
  if (!scopes.type_hint(tree.child(id, NodeKind::Type)).is_known("java.math.BigDecimal")) return;
  auto args = argument_list(tree, tree.child(id, NodeKind::Arguments));
  if (args.empty()) return;
  if (floating_hint(expr_type(args.front(), scopes))) out.push_back(id);
}

void detect_s2116(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::MethodInvocation || !no_args(tree, id)) return;
  auto name = invoked_name(tree, id);
  if (name != "toString" && name != "hashCode") return;
  auto recv = invocation_parts(tree, id).receiver;
  if (recv != kNoNode && expr_type(recv, scopes).is_array()) out.push_back(id);
}

void detect_s2142(const SyntaxTree& tree, const ScopeTable&, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::CatchClause) return;
  auto param = tree.child(id, NodeKind::CatchParam);
  if (param == kNoNode) return;
  bool interrupted = false;
  for (auto t : tree.children(param, NodeKind::Type)) {
    auto text = type_text(tree, t);
    if (text == "InterruptedException" || text == "java.lang.InterruptedException") interrupted = true;
  }
  if (!interrupted) return;
  auto block = tree.child(id, NodeKind::Block);
  bool handled = false;
  walk_code(tree, block, [&](NodeId n) {
    if (tree.kind(n) == NodeKind::ThrowStmt) handled = true;
    if (tree.kind(n) == NodeKind::MethodInvocation && invoked_name(tree, n) == "interrupt" && no_args(tree, n) &&
        invocation_parts(tree, n).receiver != kNoNode)
      handled = true;
  });
  if (!handled) out.push_back(id);
}

void detect_s2184(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  NodeId expr = kNoNode;
  switch (tree.kind(id)) {
    case NodeKind::VarDeclarator:
      for (auto c : tree.node(id).children)
        if (is_expression(tree.kind(c))) expr = c;
      break;
    case NodeKind::Assignment:
      if (operator_text(tree, id) == "=") {
        auto parts = expression_children(tree, id);
        if (parts.size() == 2) expr = parts[1];
      }
      break;
    case NodeKind::ReturnStmt: {
      auto parts = expression_children(tree, id);
      if (!parts.empty()) expr = parts.front();
      break;
    }
    default: return;
  }
  if (expr == kNoNode) return;
  auto bin = strip_parens(tree, expr);
  if (tree.kind(bin) != NodeKind::Binary) return;
  auto parts = binary_parts(tree, bin);
  if (!is_arith(parts.op)) return;
  if (!int_or_long(expr_type(parts.left, scopes)) || !int_or_long(expr_type(parts.right, scopes))) return;
  auto result = expr_type(bin, scopes);
  auto ctx = context_of(tree, scopes, bin);
  if (!ctx || ctx->type.category() != HintCategory::Primitive) return;
  int want = width_rank(ctx->type.prim);
  if (want >= 2 && want > width_rank(result.prim)) out.push_back(bin);
}

NodeId enclosing_method(const SyntaxTree& tree, NodeId id) {
  for (NodeId a = tree.node(id).parent; a != kNoNode; a = tree.node(a).parent) {
    if (tree.kind(a) == NodeKind::MethodDecl) return a;
    if (tree.kind(a) == NodeKind::ClassBody || tree.kind(a) == NodeKind::Lambda) return kNoNode;
  }
  return kNoNode;
}

void detect_s2225(const SyntaxTree& tree, const ScopeTable&, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::ReturnStmt) return;
  auto parts = expression_children(tree, id);
  if (parts.empty() || !is_null_literal(tree, parts.front())) return;
  auto m = enclosing_method(tree, id);
  if (m == kNoNode || param_count(tree, m) != 0) return;
  auto name = declared_name(tree, m);
  if (name == "toString" || name == "clone") out.push_back(id);
}

bool implements_iterator(const ClassInfo& cls) {
  for (const auto& i : cls.interfaces)
    if (i == "Iterator") return true;
  return false;
}

bool throws_no_such_element(const SyntaxTree& tree, NodeId body) {
  bool found = false;
  walk_code(tree, body, [&](NodeId n) {
    if (tree.kind(n) != NodeKind::ThrowStmt) return;
    auto parts = expression_children(tree, n);
    if (parts.empty()) return;
    auto e = strip_parens(tree, parts.front());
    if (tree.kind(e) == NodeKind::ObjectCreation &&
        type_simple_name(tree, tree.child(e, NodeKind::Type)) == "NoSuchElementException")
      found = true;
  });
  return found;
}

void detect_s2272(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::MethodDecl || declared_name(tree, id) != "next" || param_count(tree, id) != 0) return;
  auto body = tree.child(id, NodeKind::Block);
  auto* cls = scopes.class_of_body(tree.node(id).parent);
  if (body == kNoNode || !cls || !implements_iterator(*cls)) return;
  if (!throws_no_such_element(tree, body)) out.push_back(id);
}

void detect_s4973(const SyntaxTree& tree, const ScopeTable& scopes, NodeId id, std::vector<NodeId>& out) {
  if (tree.kind(id) != NodeKind::Binary) return;
  auto parts = binary_parts(tree, id);
  if (parts.op != "==" && parts.op != "!=") return;
  if (is_null_literal(tree, parts.left) || is_null_literal(tree, parts.right)) return;
  auto l = expr_type(parts.left, scopes);
  auto r = expr_type(parts.right, scopes);
  if ((l.is_string() && r.is_string()) || (l.is_boxed() && r.is_boxed() && l.name == r.name)) out.push_back(id);
}

using Detector = void (*)(const SyntaxTree&, const ScopeTable&, NodeId, std::vector<NodeId>&);

Detector detector_for(RuleId rule) {
  switch (rule) {
    case RuleId::S1217: return detect_s1217;
    case RuleId::S1860: return detect_s1860;
    case RuleId::S2095: return detect_s2095;
    case RuleId::S2111: return detect_s2111;
    case RuleId::S2116: return detect_s2116;
    case RuleId::S2142: return detect_s2142;
    case RuleId::S2184: return detect_s2184;
    case RuleId::S2225: return detect_s2225;
    case RuleId::S2272: return detect_s2272;
    case RuleId::S4973: return detect_s4973;
  }
  return nullptr;
}

// ---- assumption checks ----

TargetStatus check_s1860(const SyntaxTree& tree, const ScopeTable& scopes, NodeId e) {
  const ClassInfo* owner = nullptr;
  if (designated_field(tree, scopes, e, &owner, nullptr)) {
    if (!owner || owner->decl == kNoNode || tree.kind(owner->decl) == NodeKind::InterfaceDecl)
      return TargetStatus::excluded("lock field is not declared in a class of this file");
    return TargetStatus::ok();
  }
  auto inv = strip_parens(tree, e);
  if (tree.kind(inv) == NodeKind::MethodInvocation) {
    auto parts = invocation_parts(tree, inv);
    auto name = invoked_name(tree, inv);
    if (parts.receiver != kNoNode && no_args(tree, inv) && name.size() > 3 && name.substr(0, 3) == "get") {
      if (designated_field(tree, scopes, parts.receiver, nullptr, nullptr)) {
        auto h = expr_type(parts.receiver, scopes);
        const ClassInfo* target = h.category() == HintCategory::UserClass ? scopes.class_named(h.name) : nullptr;
        if (!target || target->decl == kNoNode || tree.kind(target->decl) == NodeKind::InterfaceDecl)
          return TargetStatus::excluded("lock owner class is not declared in this file");
        return TargetStatus::ok();
      }
    }
  }
  return TargetStatus::excluded("lock expression is neither a field nor a getter invoked on a field");
}

TargetStatus check_s2095(const SyntaxTree& tree, const ScopeTable& scopes, NodeId creation) {
  auto parent = tree.node(creation).parent;
  auto declarator = resource_declarator(tree, creation);
  if (declarator == kNoNode) {
    for (NodeId a = parent; a != kNoNode && !is_statement(tree.kind(a)); a = tree.node(a).parent)
      if (tree.kind(a) == NodeKind::Arguments) return TargetStatus::excluded("no enclosing statement to wrap");
    if (tree.kind(parent) == NodeKind::Assignment)
      return TargetStatus::excluded("resource is assigned to an existing variable");
    return TargetStatus::excluded("resource is not a local variable initializer");
  }
  auto decl = tree.node(declarator).parent;
  if (tree.children(decl, NodeKind::VarDeclarator).size() != 1)
    return TargetStatus::excluded("multiple declarators in one statement");
  auto block = tree.node(decl).parent;
  if (tree.kind(block) != NodeKind::Block)
    return TargetStatus::excluded("declaration is not a direct statement of a block");
  auto var = declared_name(tree, declarator);
  bool escapes = false;
  auto start = tree.node(decl).end;
  tree.walk(block, [&](NodeId n) {
    if (escapes) return false;
    const auto& node = tree.node(n);
    if (node.end <= start) return true;
    auto k = node.kind;
    // captured by a lambda or an inner class
    if ((k == NodeKind::Lambda || k == NodeKind::ClassBody) && references_name(tree, n, var)) {
      escapes = true;
      return false;
    }
    if (k != NodeKind::Name || tree.text(n) != var || node.start < start) return true;
    auto p = tree.node(n).parent;
    switch (tree.kind(p)) {
      case NodeKind::ReturnStmt:
      case NodeKind::VarDeclarator:
      case NodeKind::Assignment: escapes = true; break;
      default: break;
    }
    return true;
  });
  (void)scopes;
  if (escapes) return TargetStatus::excluded("resource escapes its block (returned, aliased, reassigned, or captured)");
  return TargetStatus::ok();
}

bool is_floating_literal(const SyntaxTree& tree, NodeId e) {
  e = strip_parens(tree, e);
  if (tree.kind(e) == NodeKind::Unary && operator_text(tree, e) == "-") {
    auto inner = expression_children(tree, e);
    if (inner.empty()) return false;
    e = strip_parens(tree, inner.front());
  }
  if (tree.kind(e) != NodeKind::Literal) return false;
  auto k = tree.token_of(tree.node(e).children.front()).kind;
  auto text = tree.text(e);
  bool hex = text.size() > 1 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
  return (k == TokenKind::DoubleLiteral || k == TokenKind::FloatLiteral) && !hex;
}

TargetStatus check_s2111(const SyntaxTree& tree, NodeId creation) {
  auto args = argument_list(tree, tree.child(creation, NodeKind::Arguments));
  if (args.size() == 1) return TargetStatus::ok();
  if (is_floating_literal(tree, args.front())) return TargetStatus::ok();
  return TargetStatus::excluded("first argument is not a floating-point literal that can be quoted");
}

TargetStatus check_s2184(const SyntaxTree& tree, const ScopeTable& scopes, NodeId bin) {
  auto ctx = context_of(tree, scopes, bin);
  if (!ctx || ctx->type.is_unknown()) return TargetStatus::excluded("context type is unknown");
  if (contains_kind(tree, bin, NodeKind::Cast)) return TargetStatus::excluded("expression already contains an explicit cast");
  return TargetStatus::ok();
}

TargetStatus check_s2225(const SyntaxTree& tree, NodeId ret) {
  auto m = enclosing_method(tree, ret);
  if (m != kNoNode && declared_name(tree, m) == "clone")
    return TargetStatus::excluded("clone not amenable to template repair");
  return TargetStatus::ok();
}

TargetStatus check_s2272(const SyntaxTree& tree, NodeId method) {
  auto stmts = block_statements(tree, tree.child(method, NodeKind::Block));
  if (stmts.size() == 1 && tree.kind(stmts.front()) == NodeKind::ReturnStmt) {
    auto parts = expression_children(tree, stmts.front());
    if (!parts.empty()) {
      auto e = strip_parens(tree, parts.front());
      if (tree.kind(e) == NodeKind::MethodInvocation && invoked_name(tree, e) == "next" && no_args(tree, e) &&
          invocation_parts(tree, e).receiver != kNoNode)
        return TargetStatus::excluded("next() delegates to another iterator, which already throws");
    }
  }
  return TargetStatus::ok();
}

TargetStatus check_s4973(const SyntaxTree& tree, const ScopeTable& scopes, NodeId bin) {
  auto parts = binary_parts(tree, bin);
  if (expr_type(parts.left, scopes).is_unknown() || expr_type(parts.right, scopes).is_unknown())
    return TargetStatus::excluded("operand type is unknown");
  return TargetStatus::ok();
}

}  // namespace

// ---- public API ----

const std::array<RuleInfo, 10>& all_rules() { return kRules; }

const RuleInfo& rule_info(RuleId id) { return kRules[static_cast<std::size_t>(id)]; }

std::optional<RuleId> parse_rule_id(std::string_view key) {
  for (const auto& r : kRules)
    if (r.key == key) return r.id;
  return std::nullopt;
}

std::set<RuleId> all_rule_ids() {
  std::set<RuleId> out;
  for (const auto& r : kRules) out.insert(r.id);
  return out;
}

std::uint64_t text_digest(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Violation make_violation(const SyntaxTree& tree, RuleId rule, NodeId anchor) {
  Violation v;
  v.rule = rule;
  v.file = tree.source->path;
  v.anchor = anchor;
  v.anchor_kind = tree.kind(anchor);
  v.span = tree.span(anchor);
  v.message = rule_message(rule, tree, anchor);
  v.source_digest = text_digest(tree.file_text());
  return v;
}

std::vector<Violation> detect(const SyntaxTree& tree, const ScopeTable& scopes, RuleId rule) {
  std::vector<NodeId> anchors;
  auto fn = detector_for(rule);
  tree.walk(tree.root, [&](NodeId id) {
    if (tree.kind(id) == NodeKind::Verbatim) return false;
    fn(tree, scopes, id, anchors);
    return true;
  });
  std::stable_sort(anchors.begin(), anchors.end(), [&](NodeId a, NodeId b) {
    const auto& x = tree.node(a);
    const auto& y = tree.node(b);
    return x.start != y.start ? x.start < y.start : x.end < y.end;
  });
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  std::vector<Violation> out;
  out.reserve(anchors.size());
  for (auto a : anchors) out.push_back(make_violation(tree, rule, a));
  return out;
}

std::vector<Violation> detect_all(const SyntaxTree& tree, const ScopeTable& scopes, const std::set<RuleId>& rules) {
  std::vector<Violation> out;
  for (auto r : rules) {
    auto vs = detect(tree, scopes, r);
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    return a.rule < b.rule;
  });
  return out;
}

bool violates(const SyntaxTree& tree, const ScopeTable& scopes, RuleId rule, NodeId node) {
  if (node >= tree.size()) return false;
  for (NodeId a = node; a != kNoNode; a = tree.node(a).parent)
    if (tree.kind(a) == NodeKind::Verbatim) return false;
  // some detectors report a descendant of the node they inspect (sync
  // expressions, arithmetic under a declarator): probe up to the statement
  std::vector<NodeId> out;
  for (NodeId a = node; a != kNoNode; a = tree.node(a).parent) {
    detector_for(rule)(tree, scopes, a, out);
    if (is_statement(tree.kind(a)) || is_type_declaration(tree.kind(a)) || tree.kind(a) == NodeKind::MethodDecl) break;
  }
  return std::find(out.begin(), out.end(), node) != out.end();
}

TypeHint context_type(const SyntaxTree& tree, const ScopeTable& scopes, NodeId expr) {
  auto ctx = context_of(tree, scopes, expr);
  return ctx ? ctx->type : TypeHint::unknown();
}

TargetStatus check_assumptions(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes) {
  switch (v.rule) {
    case RuleId::S1860: return check_s1860(tree, scopes, v.anchor);
    case RuleId::S2095: return check_s2095(tree, scopes, v.anchor);
    case RuleId::S2111: return check_s2111(tree, v.anchor);
    case RuleId::S2184: return check_s2184(tree, scopes, v.anchor);
    case RuleId::S2225: return check_s2225(tree, v.anchor);
    case RuleId::S2272: return check_s2272(tree, v.anchor);
    case RuleId::S4973: return check_s4973(tree, scopes, v.anchor);
    default: return TargetStatus::ok();
  }
}

// ---- helpers ----

bool references_name(const SyntaxTree& tree, NodeId node, std::string_view name) {
  auto first = tree.first_token(node);
  auto last = tree.last_token(node);
  if (first == kNoNode || last == kNoNode) return false;
  const auto& text = tree.file_text();
  auto lexeme = [&](std::size_t i) {
    const auto& t = tree.tokens[i];
    return std::string_view(text).substr(t.start, t.end - t.start);
  };
  for (std::size_t i = tree.node(first).token; i <= tree.node(last).token; ++i) {
    if (tree.tokens[i].kind != TokenKind::Identifier || lexeme(i) != name) continue;
    if (i > 0 && lexeme(i - 1) == ".") continue;
    return true;
  }
  return false;
}

NodeId enclosing_callable(const SyntaxTree& tree, NodeId id) {
  for (NodeId a = tree.node(id).parent; a != kNoNode; a = tree.node(a).parent) {
    if (is_callable(tree.kind(a))) return a;
    if (tree.kind(a) == NodeKind::ClassBody) return kNoNode;
  }
  return kNoNode;
}

std::vector<NodeId> block_statements(const SyntaxTree& tree, NodeId block) {
  std::vector<NodeId> out;
  if (block == kNoNode) return out;
  for (auto c : tree.node(block).children)
    if (!tree.is_token(c)) out.push_back(c);
  return out;
}

std::string type_simple_name(const SyntaxTree& tree, NodeId type_node) {
  if (type_node == kNoNode) return {};
  std::string last;
  for (auto c : tree.node(type_node).children)
    if (tree.is_token(c) && tree.token_of(c).kind == TokenKind::Identifier) last = std::string(tree.text(c));
  return last;
}

std::string type_text(const SyntaxTree& tree, NodeId type_node) {
  std::string out;
  if (type_node == kNoNode) return out;
  for (auto c : tree.node(type_node).children)
    if (tree.is_token(c)) out += tree.text(c);
  return out;
}

std::size_t param_count(const SyntaxTree& tree, NodeId method) {
  auto plist = tree.child(method, NodeKind::ParamList);
  return plist == kNoNode ? 0 : tree.children(plist, NodeKind::Parameter).size();
}

NodeId resource_declarator(const SyntaxTree& tree, NodeId creation) {
  auto p = tree.node(creation).parent;
  if (p == kNoNode || tree.kind(p) != NodeKind::VarDeclarator) return kNoNode;
  auto decl = tree.node(p).parent;
  if (decl == kNoNode || tree.kind(decl) != NodeKind::LocalVarDecl) return kNoNode;
  return p;
}

std::pair<std::size_t, std::size_t> resource_extent(const SyntaxTree& tree, NodeId block, NodeId decl_stmt,
                                                    std::string_view var) {
  auto stmts = block_statements(tree, block);
  auto first = static_cast<std::size_t>(std::find(stmts.begin(), stmts.end(), decl_stmt) - stmts.begin());
  std::size_t last = first;
  for (std::size_t j = first + 1; j < stmts.size(); ++j)
    if (references_name(tree, stmts[j], var)) last = j;
  // locals declared inside the range must stay visible to later uses
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::string> names;
    for (std::size_t j = first + 1; j <= last; ++j) {
      auto k = tree.kind(stmts[j]);
      if (k == NodeKind::LocalVarDecl) {
        for (auto d : tree.children(stmts[j], NodeKind::VarDeclarator)) names.emplace_back(declared_name(tree, d));
      } else if (k == NodeKind::ClassDecl) {
        names.emplace_back(declared_name(tree, stmts[j]));
      }
    }
    for (std::size_t j = last + 1; j < stmts.size(); ++j) {
      for (const auto& n : names) {
        if (references_name(tree, stmts[j], n)) {
          last = j;
          changed = true;
          break;
        }
      }
    }
  }
  return {first, last};
}

NodeId leftmost_operand(const SyntaxTree& tree, NodeId binary) {
  NodeId cur = binary;
  while (tree.kind(cur) == NodeKind::Binary && is_arith(binary_parts(tree, cur).op)) cur = binary_parts(tree, cur).left;
  return cur;
}

}  // namespace jrepair
