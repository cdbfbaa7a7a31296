#pragma once

#include <stdexcept>
#include <string>

#include "jrepair/edits.hpp"
#include "jrepair/rules.hpp"

namespace jrepair {

/// The violation is excluded by the assumption checker, or is not a violation at all.
class NotTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The tree no longer matches the one the violation was detected on.
class StaleAnchor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FixPlan fix_S1217(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S1860(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2095(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2111(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2116(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2142(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2184(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2225(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S2272(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);
FixPlan fix_S4973(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);

/// Runs the template of `v.rule`.
FixPlan fix(const Violation& v, const SyntaxTree& tree, const ScopeTable& scopes);

/// How a template should refer to a JDK class: simple name (with an import
/// when one is needed) or fully qualified when the simple name is taken.
struct TypeReference {
  std::string spelling;
  std::string import;  // empty when no import is needed
};
TypeReference reference_jdk_class(const SyntaxTree& tree, const ScopeTable& scopes, const std::string& qualified);

}  // namespace jrepair
