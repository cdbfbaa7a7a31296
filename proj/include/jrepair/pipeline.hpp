#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jrepair/diff.hpp"
#include "jrepair/edits.hpp"
#include "jrepair/rules.hpp"
#include "jrepair/type_hints.hpp"

namespace jrepair {

struct ViolationRecord {
  Violation violation;
  TargetStatus status;
};

/// Detection plus assumption checking over one parsed file.
std::vector<ViolationRecord> analyze(const SyntaxTree& tree, const ScopeTable& scopes, const std::set<RuleId>& rules);

struct RepairOptions {
  std::set<RuleId> rules = all_rule_ids();
  std::shared_ptr<const TypeTable> table = TypeTable::builtin();
};

struct FileRepair {
  std::filesystem::path path;
  std::vector<ViolationRecord> before;
  std::vector<FixPlan> plans;  // one per target violation
  std::vector<std::size_t> applied;  // indices into plans
  struct Deferred {
    std::size_t plan;
    std::string reason;
  };
  std::vector<Deferred> deferred;
  struct Failed {
    std::size_t violation;  // index into before
    std::string reason;
  };
  std::vector<Failed> failed;  // template refused a target (should not happen)
  std::vector<Violation> after;  // detection on the printed text
  PatchArtifact patch;
  std::optional<std::string> error;  // parse/print failure; no patch then
};

/// detect -> assumptions -> templates -> apply -> print -> re-detect for one file.
FileRepair repair_source(std::shared_ptr<const SourceFile> file, const RepairOptions& options);

/// Violation records of one file. Throws LexError/ParseError/DecodeError.
std::vector<ViolationRecord> mine_source(std::shared_ptr<const SourceFile> file, const RepairOptions& options);

/// .java files below `roots` (a root may itself be a file), sorted, minus
/// paths matching any exclude glob (matched against the root-relative path
/// and the file name).
std::vector<std::filesystem::path> discover_java_files(const std::vector<std::filesystem::path>& roots,
                                                       const std::vector<std::string>& excludes);

/// Runs fn(0..n-1) on up to `jobs` threads; results must be written to
/// per-index slots by the caller.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace jrepair
