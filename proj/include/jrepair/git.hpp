#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jrepair {

class RepoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommitRef {
  std::string sha;
  std::vector<std::string> parents;  // all parents as recorded in the commit
  std::int64_t time = 0;             // committer timestamp
};

/// Read-only accessor over a git repository. Every call shells out to the git
/// client using plumbing commands only; calls are serialized so one instance
/// may be shared between threads.
class GitRepo {
 public:
  /// Throws RepoError unless `path` is inside a git repository with a HEAD.
  explicit GitRepo(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  /// First-parent history of HEAD, oldest first. `since`/`until` are passed
  /// through as git date strings.
  std::vector<CommitRef> first_parent_commits(const std::string& since, const std::string& until) const;

  /// Repo-relative paths of .java files added or modified by `commit` relative
  /// to `parent` (empty parent: root commit). Deletions are not listed.
  std::vector<std::string> changed_java_files(const std::string& commit, const std::string& parent) const;

  /// File contents at a revision, nullopt when the path does not exist there.
  std::optional<std::string> blob(const std::string& rev, const std::string& path) const;

 private:
  struct Output {
    int status = 0;
    std::string out;
    std::string err;
  };
  Output run(const std::vector<std::string>& args) const;
  std::string check(const std::vector<std::string>& args) const;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

}  // namespace jrepair
