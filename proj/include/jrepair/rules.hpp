#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jrepair/syntax.hpp"
#include "jrepair/type_hints.hpp"

namespace jrepair {

enum class RuleId : std::uint8_t { S1217, S1860, S2095, S2111, S2116, S2142, S2184, S2225, S2272, S4973 };

struct RuleInfo {
  RuleId id;
  std::string_view key;
  std::string_view short_description;
  int remediation_minutes;
};

const std::array<RuleInfo, 10>& all_rules();
const RuleInfo& rule_info(RuleId id);
inline std::string_view rule_key(RuleId id) { return rule_info(id).key; }
std::optional<RuleId> parse_rule_id(std::string_view key);
std::set<RuleId> all_rule_ids();

struct Violation {
  RuleId rule = RuleId::S1217;
  std::filesystem::path file;
  NodeId anchor = kNoNode;
  NodeKind anchor_kind = NodeKind::Verbatim;
  Span span;
  std::string message;
  std::uint64_t source_digest = 0;  // digest of the file text the anchor refers to
};

struct TargetStatus {
  bool target = true;
  std::string exclusion_reason;

  static TargetStatus ok() { return {}; }
  static TargetStatus excluded(std::string reason) { return {false, std::move(reason)}; }
};

std::uint64_t text_digest(std::string_view text);

/// Builds the violation record a detector would emit for `anchor`.
Violation make_violation(const SyntaxTree& tree, RuleId rule, NodeId anchor);

/// Violations of one rule, in source order.
std::vector<Violation> detect(const SyntaxTree& tree, const ScopeTable& scopes, RuleId rule);
/// Union over `rules`, ordered by (span start, rule id).
std::vector<Violation> detect_all(const SyntaxTree& tree, const ScopeTable& scopes, const std::set<RuleId>& rules);

/// Whether `node` itself is an anchor the rule's detector reports.
bool violates(const SyntaxTree& tree, const ScopeTable& scopes, RuleId rule, NodeId node);

/// Assumption checker: whether the template for the rule can repair `v`.
TargetStatus check_assumptions(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);

// ---- helpers shared by detectors and templates ----

/// True when an identifier token equal to `name`, not preceded by '.', occurs in `node`.
bool references_name(const SyntaxTree& tree, NodeId node, std::string_view name);
/// Nearest enclosing method, constructor, or initializer; kNoNode outside code bodies.
NodeId enclosing_callable(const SyntaxTree& tree, NodeId id);
/// Statement children of a block (tokens skipped).
std::vector<NodeId> block_statements(const SyntaxTree& tree, NodeId block);
std::string type_simple_name(const SyntaxTree& tree, NodeId type_node);
std::string type_text(const SyntaxTree& tree, NodeId type_node);
/// Parameter count of a method declaration.
std::size_t param_count(const SyntaxTree& tree, NodeId method);

/// The local variable a closeable creation initializes (declarator), or kNoNode.
NodeId resource_declarator(const SyntaxTree& tree, NodeId creation);

/// Statements [first, last] of the block to wrap for a resource declared by `decl_stmt`
/// and named `var`: through the last statement mentioning the variable, extended over
/// locals declared inside the range and still used after it.
std::pair<std::size_t, std::size_t> resource_extent(const SyntaxTree& tree, NodeId block, NodeId decl_stmt,
                                                    std::string_view var);

/// Operand that receives the cast or suffix in an arithmetic chain (leftmost).
NodeId leftmost_operand(const SyntaxTree& tree, NodeId binary);

/// Field named by `e` (unshadowed simple name or this.f), with its declaring class.
const FieldInfo* designated_field(const SyntaxTree& tree, const ScopeTable& scopes, NodeId e, const ClassInfo** owner,
                                  std::string* name);

/// Type of the assignment, initializer, or return context an expression flows into.
TypeHint context_type(const SyntaxTree& tree, const ScopeTable& scopes, NodeId expr);

}  // namespace jrepair
