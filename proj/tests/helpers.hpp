#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jrepair/parser.hpp"
#include "jrepair/rules.hpp"

namespace testutil {

inline jrepair::SyntaxTree parse_text(const std::string& text, bool recover = true) {
  auto file = std::make_shared<const jrepair::SourceFile>(jrepair::SourceFile::from_text("Test.java", text));
  return jrepair::parse(file, {recover});
}

inline std::filesystem::path fixtures() { return JREPAIR_FIXTURES; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Finds the first node of `kind` whose text equals `text`.
inline jrepair::NodeId find_node(const jrepair::SyntaxTree& tree, jrepair::NodeKind kind, std::string_view text) {
  jrepair::NodeId found = jrepair::kNoNode;
  tree.walk(tree.root, [&](jrepair::NodeId id) {
    if (found != jrepair::kNoNode) return false;
    if (tree.kind(id) == kind && tree.text(id) == text) found = id;
    return true;
  });
  return found;
}

// Runs a shell command and returns its stdout.
inline std::string capture(const std::string& cmd, int* status = nullptr) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
  int st = pclose(p);
  if (status) *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("jrepair-" + tag + "-" + std::to_string(getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline std::shared_ptr<const jrepair::SourceFile> load_as(const std::filesystem::path& p, const std::string& name) {
  return std::make_shared<const jrepair::SourceFile>(jrepair::SourceFile::from_text(name, slurp(p)));
}

// Hand labels of one rule directory: file -> "line:col status" entries.
struct Label {
  std::string where;   // "line:col"
  std::string status;  // target | excluded
  bool operator==(const Label&) const = default;
  bool operator<(const Label& o) const { return where != o.where ? where < o.where : status < o.status; }
};
using Labels = std::map<std::string, std::vector<Label>>;

inline Labels read_labels(const std::filesystem::path& dir) {
  Labels out;
  std::istringstream in(slurp(dir / "labels.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string file, where, status;
    ls >> file >> where >> status;
    auto& v = out[file];
    if (where != "-") v.push_back({where, status});
  }
  return out;
}

inline const char* kRuleDirs[] = {"S1217", "S1860", "S2095", "S2111", "S2116",
                                  "S2142", "S2184", "S2225", "S2272", "S4973"};

}  // namespace testutil
