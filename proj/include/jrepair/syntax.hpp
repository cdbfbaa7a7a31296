#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jrepair/lexer.hpp"
#include "jrepair/source.hpp"

namespace jrepair {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;

enum class NodeKind : std::uint8_t {
  CompilationUnit,
  PackageDecl,
  ImportDecl,
  ClassDecl,
  InterfaceDecl,
  EnumDecl,
  EnumConstant,
  ClassBody,
  FieldDecl,
  MethodDecl,
  ConstructorDecl,
  Initializer,
  Modifiers,
  Annotation,
  TypeParams,
  Type,
  TypeArgs,
  ParamList,
  Parameter,
  ThrowsClause,
  ExtendsClause,
  ImplementsClause,
  VarDeclarator,
  ArrayInit,
  // statements
  Block,
  LocalVarDecl,
  ExprStmt,
  IfStmt,
  WhileStmt,
  DoStmt,
  ForStmt,
  ForEachStmt,
  TryStmt,
  ResourceSpec,
  Resource,
  CatchClause,
  CatchParam,
  FinallyClause,
  SwitchStmt,
  SwitchGroup,
  SwitchLabel,
  ReturnStmt,
  ThrowStmt,
  BreakStmt,
  ContinueStmt,
  SyncStmt,
  LabeledStmt,
  EmptyStmt,
  AssertStmt,
  // expressions
  Name,
  Literal,
  FieldAccess,
  MethodInvocation,
  Arguments,
  ObjectCreation,
  ArrayCreation,
  DimExpr,
  ArrayAccess,
  Binary,
  Unary,
  Postfix,
  Cast,
  Conditional,
  Assignment,
  InstanceOf,
  Lambda,
  MethodRef,
  Parens,
  This,
  Super,
  ClassLiteral,
  // leaves
  Token,
  Verbatim,
};

/// Grammar production name, e.g. "method-invocation".
std::string_view kind_name(NodeKind kind);
bool is_expression(NodeKind kind);
bool is_statement(NodeKind kind);
bool is_type_declaration(NodeKind kind);

struct SyntaxNode {
  NodeKind kind = NodeKind::Verbatim;
  NodeId parent = kNoNode;
  std::uint32_t token = 0xFFFFFFFFu;  // significant-token index for Token leaves
  std::uint32_t start = 0;            // byte range of the node's own tokens
  std::uint32_t end = 0;
  std::vector<NodeId> children;
};

/// Concrete syntax tree of one file. Every significant token is a leaf; the
/// documentary text between tokens is not owned by any node and is recovered
/// from the byte gaps between sibling fragments.
class SyntaxTree {
 public:
  std::shared_ptr<const SourceFile> source;
  std::vector<Token> tokens;
  std::vector<SyntaxNode> nodes;
  NodeId root = kNoNode;

  const SyntaxNode& node(NodeId id) const { return nodes.at(id); }
  NodeKind kind(NodeId id) const { return nodes.at(id).kind; }
  std::string_view text(NodeId id) const;
  std::string_view text(std::uint32_t start, std::uint32_t end) const;
  Span span(NodeId id) const;
  const std::string& file_text() const { return source->text; }
  std::size_t size() const { return nodes.size(); }

  bool is_token(NodeId id) const { return kind(id) == NodeKind::Token; }
  bool is_token(NodeId id, std::string_view lexeme) const { return is_token(id) && text(id) == lexeme; }
  const Token& token_of(NodeId leaf) const { return tokens.at(nodes.at(leaf).token); }

  /// First direct child of `kind`, or kNoNode.
  NodeId child(NodeId id, NodeKind kind) const;
  std::vector<NodeId> children(NodeId id, NodeKind kind) const;
  /// First direct child token with the given lexeme.
  NodeId child_token(NodeId id, std::string_view lexeme) const;
  /// Nearest strict ancestor of `kind`.
  NodeId ancestor(NodeId id, NodeKind kind) const;
  NodeId ancestor_if(NodeId id, const std::function<bool(NodeKind)>& pred) const;
  bool is_ancestor(NodeId ancestor, NodeId id) const;

  /// Index of `id` among its parent's children.
  std::size_t index_in_parent(NodeId id) const;
  NodeId first_token(NodeId id) const;
  NodeId last_token(NodeId id) const;

  /// Preorder walk; return false from `fn` to skip a subtree.
  void walk(NodeId from, const std::function<bool(NodeId)>& fn) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, Span span, std::string expected)
      : std::runtime_error(std::move(message)), span(span), expected(std::move(expected)) {}
  Span span;
  std::string expected;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest node whose byte range contains [start, end). Zero-width and
/// out-of-node queries fall back to the nearest containing node (root for (0,0)).
NodeId node_at(const SyntaxTree& tree, std::uint32_t start, std::uint32_t end);
inline NodeId node_at(const SyntaxTree& tree, const Span& span) { return node_at(tree, span.start, span.end); }

/// Rebuilds the file text from the leaves and the inter-token gaps alone.
std::string reconstruct_from_leaves(const SyntaxTree& tree);

/// Structural check of the tree invariants; returns a description of the first violation.
std::optional<std::string> check_tree_invariants(const SyntaxTree& tree);

bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b);

// ---- views over common productions ----

struct InvocationParts {
  NodeId receiver = kNoNode;  // expression before '.', if any
  NodeId name = kNoNode;      // identifier token leaf
  NodeId args = kNoNode;      // Arguments node
};
InvocationParts invocation_parts(const SyntaxTree& tree, NodeId invocation);

/// Expressions in an Arguments node.
std::vector<NodeId> argument_list(const SyntaxTree& tree, NodeId arguments);

struct BinaryParts {
  NodeId left = kNoNode;
  std::string op;
  NodeId right = kNoNode;
};
BinaryParts binary_parts(const SyntaxTree& tree, NodeId binary);

/// Operator text of Unary/Postfix/Assignment nodes (concatenated punct tokens).
std::string operator_text(const SyntaxTree& tree, NodeId id);

/// Identifier of a declaration (class, method, declarator, parameter...).
std::string_view declared_name(const SyntaxTree& tree, NodeId decl);

/// Expression children of an expression-like node (skips tokens).
std::vector<NodeId> expression_children(const SyntaxTree& tree, NodeId id);

/// Strips any number of enclosing parentheses.
NodeId strip_parens(const SyntaxTree& tree, NodeId expr);

/// True when `modifiers`-bearing declaration has the given modifier keyword.
bool has_modifier(const SyntaxTree& tree, NodeId decl, std::string_view keyword);

}  // namespace jrepair
