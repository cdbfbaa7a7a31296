#include "jrepair/history.hpp"

#include <algorithm>
#include <map>

#include "jrepair/parser.hpp"

namespace jrepair {

std::vector<CommitEntry> enumerate_commits(const GitRepo& repo, const std::string& since, const std::string& until,
                                           std::vector<std::string>* diagnostics) {
  std::vector<CommitEntry> out;
  for (auto& ref : repo.first_parent_commits(since, until)) {
    if (ref.parents.size() > 2) {
      if (diagnostics) diagnostics->push_back(ref.sha + ": octopus merge skipped");
      continue;
    }
    CommitEntry e;
    e.parent = ref.parents.empty() ? "" : ref.parents.front();
    e.java_files = repo.changed_java_files(ref.sha, e.parent);
    e.ref = std::move(ref);
    if (!e.java_files.empty()) out.push_back(std::move(e));
  }
  return out;
}

std::int64_t CommitScan::introduced(RuleId rule) const {
  for (const auto& d : rules)
    if (d.rule == rule) return d.introduced;
  return 0;
}

namespace {

// Per-rule counts of one file at one revision, or nullopt with a diagnostic.
std::optional<std::map<RuleId, std::int64_t>> count_at(const GitRepo& repo, const std::string& rev,
                                                       const std::string& path, const RepairOptions& options,
                                                       std::vector<std::string>& diagnostics) {
  std::map<RuleId, std::int64_t> counts;
  if (rev.empty()) return counts;
  auto text = repo.blob(rev, path);
  if (!text) return counts;  // file added by the commit
  try {
    auto file = std::make_shared<SourceFile>(SourceFile::from_text(path, std::move(*text)));
    for (const auto& rec : mine_source(file, options)) ++counts[rec.violation.rule];
  } catch (const std::exception& e) {
    diagnostics.push_back(rev.substr(0, 7) + ":" + path + ": skipped: " + e.what());
    return std::nullopt;
  }
  return counts;
}

}  // namespace

CommitScan scan_commit(const GitRepo& repo, const CommitEntry& commit, const RepairOptions& options) {
  CommitScan scan;
  scan.commit = commit;
  std::map<RuleId, RuleDelta> deltas;
  for (const auto& path : commit.java_files) {
    auto now = count_at(repo, commit.ref.sha, path, options, scan.diagnostics);
    auto before = count_at(repo, commit.parent, path, options, scan.diagnostics);
    if (!now || !before) continue;
    for (auto rule : options.rules) {
      auto c = now->count(rule) ? now->at(rule) : 0;
      auto p = before->count(rule) ? before->at(rule) : 0;
      if (c == 0 && p == 0) continue;
      auto& d = deltas.try_emplace(rule, RuleDelta{rule}).first->second;
      d.at_commit += c;
      d.at_parent += p;
      d.introduced += std::max<std::int64_t>(0, c - p);
    }
  }
  for (auto& [rule, d] : deltas) scan.rules.push_back(d);
  return scan;
}

std::string CommitPatch::file_name() const { return commit.substr(0, 7) + "-" + std::string(rule_key(rule)) + ".patch"; }

std::string CommitPatch::text() const {
  std::string s;
  for (const auto& f : files) s += f.diff;
  return s;
}

CommitPatch generate_commit_patch(const GitRepo& repo, const CommitEntry& commit, RuleId rule,
                                  const RepairOptions& options) {
  CommitPatch patch;
  patch.commit = commit.ref.sha;
  patch.time = commit.ref.time;
  patch.rule = rule;
  RepairOptions opts = options;
  opts.rules = {rule};
  std::vector<std::string> reasons;
  for (const auto& path : commit.java_files) {
    auto text = repo.blob(commit.ref.sha, path);
    if (!text) continue;
    FileRepair r;
    try {
      r = repair_source(std::make_shared<SourceFile>(SourceFile::from_text(path, std::move(*text))), opts);
    } catch (const std::exception& e) {
      reasons.push_back(path + ": " + e.what());
      continue;
    }
    if (r.error) {
      reasons.push_back(path + ": " + *r.error);
      continue;
    }
    for (const auto& rec : r.before)
      if (!rec.status.target) reasons.push_back(path + ":" + std::to_string(rec.violation.span.start_line) + ": " +
                                                rec.status.exclusion_reason);
    for (const auto& d : r.deferred) patch.deferred.push_back(path + ": " + d.reason);
    for (const auto& f : r.failed) reasons.push_back(path + ": " + f.reason);
    if (r.patch.diff.empty()) continue;
    patch.fixed += static_cast<std::int64_t>(r.before.size()) - static_cast<std::int64_t>(r.after.size());
    patch.files.push_back(std::move(r.patch));
  }
  if (patch.files.empty() || patch.fixed <= 0) {
    std::string why = reasons.empty() ? "no target violations could be fixed" : reasons.front();
    for (std::size_t i = 1; i < reasons.size(); ++i) why += "; " + reasons[i];
    throw EmptyPatch(why);
  }
  return patch;
}

HistoryReport scan_history(const GitRepo& repo, const std::string& since, const std::string& until,
                           const RepairOptions& options, unsigned jobs) {
  HistoryReport report;
  auto commits = enumerate_commits(repo, since, until, &report.diagnostics);

  struct Slot {
    CommitScan scan;
    std::vector<CommitPatch> patches;
    std::vector<EmptyPatchRecord> empty;
  };
  std::vector<Slot> slots(commits.size());
  parallel_for(commits.size(), jobs, [&](std::size_t i) {
    auto& slot = slots[i];
    slot.scan = scan_commit(repo, commits[i], options);
    for (const auto& d : slot.scan.rules) {
      if (d.introduced <= 0) continue;
      try {
        slot.patches.push_back(generate_commit_patch(repo, commits[i], d.rule, options));
      } catch (const EmptyPatch& e) {
        slot.empty.push_back({commits[i].ref.sha, d.rule, e.what()});
      }
    }
  });

  // first-parent order is already chronological; a stable sort on time keeps
  // it for equal timestamps
  std::vector<std::size_t> order(slots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return commits[a].ref.time < commits[b].ref.time; });
  for (auto i : order) {
    auto& slot = slots[i];
    for (const auto& d : slot.scan.diagnostics) report.diagnostics.push_back(d);
    for (auto& p : slot.patches) report.patches.push_back(std::move(p));
    for (auto& e : slot.empty) report.empty_patches.push_back(std::move(e));
    report.commits.push_back(std::move(slot.scan));
  }
  return report;
}

}  // namespace jrepair
