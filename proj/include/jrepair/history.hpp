#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrepair/git.hpp"
#include "jrepair/pipeline.hpp"

namespace jrepair {

/// A first-parent commit together with the .java files it changed.
struct CommitEntry {
  CommitRef ref;
  std::string parent;  // empty for a root commit
  std::vector<std::string> java_files;
};

/// First-parent commits in [since, until] touching at least one .java file,
/// oldest first. Octopus merges are skipped with a diagnostic.
std::vector<CommitEntry> enumerate_commits(const GitRepo& repo, const std::string& since, const std::string& until,
                                           std::vector<std::string>* diagnostics = nullptr);

struct RuleDelta {
  RuleId rule;
  std::int64_t at_commit = 0;
  std::int64_t at_parent = 0;
  std::int64_t introduced = 0;  // sum over files of max(0, commit - parent)
};

struct CommitScan {
  CommitEntry commit;
  std::vector<RuleDelta> rules;  // only rules seen at either revision, ordered by id
  std::vector<std::string> diagnostics;

  std::int64_t introduced(RuleId rule) const;
};

CommitScan scan_commit(const GitRepo& repo, const CommitEntry& commit, const RepairOptions& options);

/// All target violations of `rule` were excluded (or nothing could be fixed).
class EmptyPatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommitPatch {
  std::string commit;
  std::int64_t time = 0;
  RuleId rule;
  std::vector<PatchArtifact> files;  // one per changed file with fixes, repo-relative paths
  std::int64_t fixed = 0;            // detected before minus detected after, over those files
  std::vector<std::string> deferred;

  /// "<shortsha>-<rule>.patch"
  std::string file_name() const;
  /// Concatenated per-file diffs.
  std::string text() const;
};

/// Repairs `rule` in the changed files at the commit revision. Throws EmptyPatch.
CommitPatch generate_commit_patch(const GitRepo& repo, const CommitEntry& commit, RuleId rule,
                                  const RepairOptions& options);

struct EmptyPatchRecord {
  std::string commit;
  RuleId rule;
  std::string reason;
};

struct HistoryReport {
  std::vector<CommitScan> commits;
  std::vector<CommitPatch> patches;  // ordered by commit time, then rule
  std::vector<EmptyPatchRecord> empty_patches;
  std::vector<std::string> diagnostics;
};

HistoryReport scan_history(const GitRepo& repo, const std::string& since, const std::string& until,
                           const RepairOptions& options, unsigned jobs = 1);

}  // namespace jrepair
