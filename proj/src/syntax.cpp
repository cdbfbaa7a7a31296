#include "jrepair/syntax.hpp"

#include <algorithm>

namespace jrepair {

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::CompilationUnit: return "compilation-unit";
    case NodeKind::PackageDecl: return "package-declaration";
    case NodeKind::ImportDecl: return "import-declaration";
    case NodeKind::ClassDecl: return "class-declaration";
    case NodeKind::InterfaceDecl: return "interface-declaration";
    case NodeKind::EnumDecl: return "enum-declaration";
    case NodeKind::EnumConstant: return "enum-constant";
    case NodeKind::ClassBody: return "class-body";
    case NodeKind::FieldDecl: return "field-declaration";
    case NodeKind::MethodDecl: return "method-declaration";
    case NodeKind::ConstructorDecl: return "constructor-declaration";
    case NodeKind::Initializer: return "initializer";
    case NodeKind::Modifiers: return "modifiers";
    case NodeKind::Annotation: return "annotation";
    case NodeKind::TypeParams: return "type-parameters";
    case NodeKind::Type: return "type";
    case NodeKind::TypeArgs: return "type-arguments";
    case NodeKind::ParamList: return "formal-parameters";
    case NodeKind::Parameter: return "formal-parameter";
    case NodeKind::ThrowsClause: return "throws-clause";
    case NodeKind::ExtendsClause: return "extends-clause";
    case NodeKind::ImplementsClause: return "implements-clause";
    case NodeKind::VarDeclarator: return "variable-declarator";
    case NodeKind::ArrayInit: return "array-initializer";
    case NodeKind::Block: return "block";
    case NodeKind::LocalVarDecl: return "local-variable-declaration";
    case NodeKind::ExprStmt: return "expression-statement";
    case NodeKind::IfStmt: return "if-statement";
    case NodeKind::WhileStmt: return "while-statement";
    case NodeKind::DoStmt: return "do-statement";
    case NodeKind::ForStmt: return "for-statement";
    case NodeKind::ForEachStmt: return "enhanced-for-statement";
    case NodeKind::TryStmt: return "try-statement";
    case NodeKind::ResourceSpec: return "resource-specification";
    case NodeKind::Resource: return "resource";
    case NodeKind::CatchClause: return "catch-clause";
    case NodeKind::CatchParam: return "catch-formal-parameter";
    case NodeKind::FinallyClause: return "finally-clause";
    case NodeKind::SwitchStmt: return "switch-statement";
    case NodeKind::SwitchGroup: return "switch-block-statement-group";
    case NodeKind::SwitchLabel: return "switch-label";
    case NodeKind::ReturnStmt: return "return-statement";
    case NodeKind::ThrowStmt: return "throw-statement";
    case NodeKind::BreakStmt: return "break-statement";
    case NodeKind::ContinueStmt: return "continue-statement";
    case NodeKind::SyncStmt: return "synchronized-statement";
    case NodeKind::LabeledStmt: return "labeled-statement";
    case NodeKind::EmptyStmt: return "empty-statement";
    case NodeKind::AssertStmt: return "assert-statement";
    case NodeKind::Name: return "name";
    case NodeKind::Literal: return "literal";
    case NodeKind::FieldAccess: return "field-access";
    case NodeKind::MethodInvocation: return "method-invocation";
    case NodeKind::Arguments: return "arguments";
    case NodeKind::ObjectCreation: return "object-creation";
    case NodeKind::ArrayCreation: return "array-creation";
    case NodeKind::DimExpr: return "dimension-expression";
    case NodeKind::ArrayAccess: return "array-access";
    case NodeKind::Binary: return "binary-expression";
    case NodeKind::Unary: return "unary-expression";
    case NodeKind::Postfix: return "postfix-expression";
    case NodeKind::Cast: return "cast-expression";
    case NodeKind::Conditional: return "conditional-expression";
    case NodeKind::Assignment: return "assignment";
    case NodeKind::InstanceOf: return "instanceof-expression";
    case NodeKind::Lambda: return "lambda-expression";
    case NodeKind::MethodRef: return "method-reference";
    case NodeKind::Parens: return "parenthesized-expression";
    case NodeKind::This: return "this";
    case NodeKind::Super: return "super";
    case NodeKind::ClassLiteral: return "class-literal";
    case NodeKind::Token: return "token";
    case NodeKind::Verbatim: return "verbatim";
  }
  return "unknown";
}

bool is_expression(NodeKind kind) {
  return kind >= NodeKind::Name && kind <= NodeKind::ClassLiteral && kind != NodeKind::Arguments &&
         kind != NodeKind::DimExpr;
}

bool is_statement(NodeKind kind) { return kind >= NodeKind::Block && kind <= NodeKind::AssertStmt &&
                                          kind != NodeKind::ResourceSpec && kind != NodeKind::Resource &&
                                          kind != NodeKind::CatchClause && kind != NodeKind::CatchParam &&
                                          kind != NodeKind::FinallyClause && kind != NodeKind::SwitchGroup &&
                                          kind != NodeKind::SwitchLabel; }

bool is_type_declaration(NodeKind kind) {
  return kind == NodeKind::ClassDecl || kind == NodeKind::InterfaceDecl || kind == NodeKind::EnumDecl;
}

std::string_view SyntaxTree::text(NodeId id) const {
  const auto& n = nodes.at(id);
  return text(n.start, n.end);
}

std::string_view SyntaxTree::text(std::uint32_t start, std::uint32_t end) const {
  return std::string_view(source->text).substr(start, end - start);
}

Span SyntaxTree::span(NodeId id) const {
  const auto& n = nodes.at(id);
  return source->lines.span(n.start, n.end);
}

NodeId SyntaxTree::child(NodeId id, NodeKind k) const {
  for (auto c : nodes.at(id).children)
    if (nodes[c].kind == k) return c;
  return kNoNode;
}

std::vector<NodeId> SyntaxTree::children(NodeId id, NodeKind k) const {
  std::vector<NodeId> out;
  for (auto c : nodes.at(id).children)
    if (nodes[c].kind == k) out.push_back(c);
  return out;
}

NodeId SyntaxTree::child_token(NodeId id, std::string_view lexeme) const {
  for (auto c : nodes.at(id).children)
    if (is_token(c, lexeme)) return c;
  return kNoNode;
}

NodeId SyntaxTree::ancestor(NodeId id, NodeKind k) const {
  for (auto p = nodes.at(id).parent; p != kNoNode; p = nodes[p].parent)
    if (nodes[p].kind == k) return p;
  return kNoNode;
}

NodeId SyntaxTree::ancestor_if(NodeId id, const std::function<bool(NodeKind)>& pred) const {
  for (auto p = nodes.at(id).parent; p != kNoNode; p = nodes[p].parent)
    if (pred(nodes[p].kind)) return p;
  return kNoNode;
}

bool SyntaxTree::is_ancestor(NodeId anc, NodeId id) const {
  for (auto p = nodes.at(id).parent; p != kNoNode; p = nodes[p].parent)
    if (p == anc) return true;
  return false;
}

std::size_t SyntaxTree::index_in_parent(NodeId id) const {
  const auto& siblings = nodes.at(nodes.at(id).parent).children;
  return static_cast<std::size_t>(std::find(siblings.begin(), siblings.end(), id) - siblings.begin());
}

NodeId SyntaxTree::first_token(NodeId id) const {
  while (!is_token(id)) {
    if (nodes[id].children.empty()) return kNoNode;
    id = nodes[id].children.front();
  }
  return id;
}

NodeId SyntaxTree::last_token(NodeId id) const {
  while (!is_token(id)) {
    if (nodes[id].children.empty()) return kNoNode;
    id = nodes[id].children.back();
  }
  return id;
}

void SyntaxTree::walk(NodeId from, const std::function<bool(NodeId)>& fn) const {
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (!fn(id)) continue;
    const auto& ch = nodes[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
}

NodeId node_at(const SyntaxTree& tree, std::uint32_t start, std::uint32_t end) {
  if (start > end || end > tree.file_text().size()) throw NotFound("span outside file bounds");
  NodeId cur = tree.root;
  bool descended = true;
  while (descended) {
    descended = false;
    for (auto c : tree.node(cur).children) {
      const auto& n = tree.node(c);
      if (n.kind == NodeKind::Token) continue;
      bool inside = start == end ? (n.start < start && start < n.end) : (n.start <= start && end <= n.end);
      if (inside) {
        cur = c;
        descended = true;
        break;
      }
    }
  }
  return cur;
}

std::string reconstruct_from_leaves(const SyntaxTree& tree) {
  std::string out;
  const auto& text = tree.file_text();
  std::uint32_t cursor = 0;
  tree.walk(tree.root, [&](NodeId id) {
    if (tree.is_token(id)) {
      const auto& n = tree.node(id);
      out.append(text, cursor, n.start - cursor);  // documentary gap
      out.append(text, n.start, n.end - n.start);
      cursor = n.end;
    }
    return true;
  });
  out.append(text, cursor, std::string::npos);
  return out;
}

std::optional<std::string> check_tree_invariants(const SyntaxTree& tree) {
  std::uint32_t expected_token = 0;
  std::optional<std::string> problem;
  tree.walk(tree.root, [&](NodeId id) {
    if (problem) return false;
    const auto& n = tree.node(id);
    if (n.start > n.end) problem = "inverted span at node " + std::to_string(id);
    if (n.kind == NodeKind::Token) {
      if (n.token != expected_token) problem = "token leaves out of order at token " + std::to_string(n.token);
      ++expected_token;
      return true;
    }
    std::uint32_t prev_end = n.start;
    for (auto c : n.children) {
      const auto& ch = tree.node(c);
      if (ch.parent != id) problem = "bad parent link at node " + std::to_string(c);
      if (ch.start < prev_end || ch.end > n.end) {
        problem = "child span not disjoint/contained at node " + std::to_string(c) + " (" +
                  std::string(kind_name(ch.kind)) + ")";
      }
      prev_end = ch.end;
    }
    return true;
  });
  if (!problem && expected_token != tree.tokens.size()) problem = "tokens missing from tree";
  if (!problem && reconstruct_from_leaves(tree) != tree.file_text()) problem = "leaf reconstruction differs";
  // gaps between leaves must be documentary: every significant token is a leaf, so
  // the lexer guarantees the remaining bytes are whitespace or comments.
  return problem;
}

bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.nodes.size() != b.nodes.size() || a.root != b.root) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& x = a.nodes[i];
    const auto& y = b.nodes[i];
    if (x.kind != y.kind || x.start != y.start || x.end != y.end || x.children != y.children ||
        x.parent != y.parent || x.token != y.token)
      return false;
  }
  return true;
}

InvocationParts invocation_parts(const SyntaxTree& tree, NodeId inv) {
  InvocationParts parts;
  const auto& ch = tree.node(inv).children;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    auto c = ch[i];
    if (tree.kind(c) == NodeKind::Arguments) {
      parts.args = c;
      // the name is the token right before the arguments
      if (i > 0 && tree.is_token(ch[i - 1])) parts.name = ch[i - 1];
    }
  }
  if (!ch.empty() && !tree.is_token(ch.front()) && tree.kind(ch.front()) != NodeKind::Arguments &&
      tree.kind(ch.front()) != NodeKind::TypeArgs)
    parts.receiver = ch.front();
  return parts;
}

std::vector<NodeId> argument_list(const SyntaxTree& tree, NodeId arguments) {
  std::vector<NodeId> out;
  if (arguments == kNoNode) return out;
  for (auto c : tree.node(arguments).children)
    if (!tree.is_token(c)) out.push_back(c);
  return out;
}

BinaryParts binary_parts(const SyntaxTree& tree, NodeId bin) {
  BinaryParts parts;
  for (auto c : tree.node(bin).children) {
    if (tree.is_token(c)) {
      if (parts.left != kNoNode && parts.right == kNoNode) parts.op += tree.text(c);
    } else if (parts.left == kNoNode) {
      parts.left = c;
    } else {
      parts.right = c;
    }
  }
  return parts;
}

std::string operator_text(const SyntaxTree& tree, NodeId id) {
  std::string op;
  for (auto c : tree.node(id).children) {
    if (tree.is_token(c) && tree.token_of(c).kind == TokenKind::Punct) op += tree.text(c);
  }
  return op;
}

std::string_view declared_name(const SyntaxTree& tree, NodeId decl) {
  switch (tree.kind(decl)) {
    case NodeKind::ClassDecl:
    case NodeKind::InterfaceDecl:
    case NodeKind::EnumDecl:
    case NodeKind::MethodDecl:
    case NodeKind::ConstructorDecl:
    case NodeKind::VarDeclarator:
    case NodeKind::Parameter:
    case NodeKind::CatchParam:
    case NodeKind::EnumConstant:
    case NodeKind::Resource:
    case NodeKind::ForEachStmt:
      for (auto c : tree.node(decl).children) {
        if (tree.is_token(c) && tree.token_of(c).kind == TokenKind::Identifier) return tree.text(c);
      }
      break;
    default:
      break;
  }
  return {};
}

std::vector<NodeId> expression_children(const SyntaxTree& tree, NodeId id) {
  std::vector<NodeId> out;
  for (auto c : tree.node(id).children)
    if (is_expression(tree.kind(c))) out.push_back(c);
  return out;
}

NodeId strip_parens(const SyntaxTree& tree, NodeId expr) {
  while (expr != kNoNode && tree.kind(expr) == NodeKind::Parens) {
    auto inner = expression_children(tree, expr);
    if (inner.empty()) break;
    expr = inner.front();
  }
  return expr;
}

bool has_modifier(const SyntaxTree& tree, NodeId decl, std::string_view keyword) {
  auto mods = tree.child(decl, NodeKind::Modifiers);
  if (mods == kNoNode) return false;
  return tree.child_token(mods, keyword) != kNoNode;
}

}  // namespace jrepair
