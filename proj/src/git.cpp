#include "jrepair/git.hpp"

#include <fcntl.h>
#include <poll.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>
#include <sstream>

extern char** environ;

namespace jrepair {

namespace {

bool is_java(const std::string& p) { return p.size() > 5 && p.compare(p.size() - 5, 5, ".java") == 0; }

}  // namespace

GitRepo::GitRepo(std::filesystem::path path) : path_(std::move(path)) {
  if (!std::filesystem::is_directory(path_)) throw RepoError("not a directory: " + path_.string());
  auto r = run({"rev-list", "-n", "1", "HEAD"});
  if (r.status != 0) throw RepoError("not a git repository with commits: " + path_.string() + ": " + r.err);
}

GitRepo::Output GitRepo::run(const std::vector<std::string>& args) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::vector<std::string> argv_s = {"git", "-C", path_.string()};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_s) argv.push_back(a.data());
  argv.push_back(nullptr);

  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0) throw RepoError(std::string("pipe: ") + std::strerror(errno));
  if (pipe(err_pipe) != 0) {
    close(out_pipe[0]);
    close(out_pipe[1]);
    throw RepoError(std::string("pipe: ") + std::strerror(errno));
  }
  posix_spawn_file_actions_t fa;
  posix_spawn_file_actions_init(&fa);
  posix_spawn_file_actions_addopen(&fa, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_adddup2(&fa, out_pipe[1], 1);
  posix_spawn_file_actions_adddup2(&fa, err_pipe[1], 2);
  posix_spawn_file_actions_addclose(&fa, out_pipe[0]);
  posix_spawn_file_actions_addclose(&fa, err_pipe[0]);
  pid_t pid;
  int rc = posix_spawnp(&pid, "git", &fa, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&fa);
  close(out_pipe[1]);
  close(err_pipe[1]);
  if (rc != 0) {
    close(out_pipe[0]);
    close(err_pipe[0]);
    throw RepoError(std::string("cannot run git: ") + std::strerror(rc));
  }

  Output o;
  std::array<pollfd, 2> fds{{{out_pipe[0], POLLIN, 0}, {err_pipe[0], POLLIN, 0}}};
  std::string* sinks[2] = {&o.out, &o.err};
  int open_fds = 2;
  char buf[65536];
  while (open_fds > 0) {
    if (poll(fds.data(), fds.size(), -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int i = 0; i < 2; ++i) {
      if (fds[i].fd < 0 || !(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      ssize_t n = read(fds[i].fd, buf, sizeof buf);
      if (n > 0) {
        sinks[i]->append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || errno != EINTR) {
        close(fds[i].fd);
        fds[i].fd = -1;
        --open_fds;
      }
    }
  }
  for (auto& f : fds)
    if (f.fd >= 0) close(f.fd);
  int ws = 0;
  while (waitpid(pid, &ws, 0) < 0 && errno == EINTR) {
  }
  o.status = WIFEXITED(ws) ? WEXITSTATUS(ws) : 128;
  return o;
}

std::string GitRepo::check(const std::vector<std::string>& args) const {
  auto r = run(args);
  if (r.status != 0) {
    std::string cmd = "git";
    for (const auto& a : args) cmd += " " + a;
    throw RepoError(cmd + " failed: " + r.err);
  }
  return std::move(r.out);
}

std::vector<CommitRef> GitRepo::first_parent_commits(const std::string& since, const std::string& until) const {
  // --parents would report rewritten (first-parent only) parents, so the
  // real parent list comes from the format string instead.
  std::vector<std::string> args = {"rev-list", "--first-parent", "--reverse", "--format=%H %ct %P"};
  if (!since.empty()) args.push_back("--since=" + since);
  if (!until.empty()) args.push_back("--until=" + until);
  args.push_back("HEAD");
  std::istringstream in(check(args));
  std::vector<CommitRef> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.rfind("commit ", 0) == 0) continue;
    std::istringstream ls(line);
    CommitRef c;
    ls >> c.sha >> c.time;
    for (std::string p; ls >> p;) c.parents.push_back(p);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::string> GitRepo::changed_java_files(const std::string& commit, const std::string& parent) const {
  std::vector<std::string> args = {"diff-tree", "-r", "--no-renames", "--name-status", "-z", "--no-commit-id"};
  if (parent.empty()) {
    args.push_back("--root");
    args.push_back(commit);
  } else {
    args.push_back(parent);
    args.push_back(commit);
  }
  auto out = check(args);
  // -z output: status NUL path NUL ...
  std::vector<std::string> fields;
  for (std::size_t i = 0; i < out.size();) {
    auto j = out.find('\0', i);
    if (j == std::string::npos) j = out.size();
    fields.push_back(out.substr(i, j - i));
    i = j + 1;
  }
  std::vector<std::string> files;
  for (std::size_t i = 0; i + 1 < fields.size(); i += 2) {
    const auto& status = fields[i];
    const auto& p = fields[i + 1];
    if (status.empty() || status[0] == 'D') continue;
    if (is_java(p)) files.push_back(p);
  }
  return files;
}

std::optional<std::string> GitRepo::blob(const std::string& rev, const std::string& path) const {
  std::string obj = rev + ":" + path;
  if (run({"cat-file", "-e", obj}).status != 0) return std::nullopt;
  return check({"cat-file", "blob", obj});
}

}  // namespace jrepair
