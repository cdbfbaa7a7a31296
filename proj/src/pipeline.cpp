#include "jrepair/pipeline.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "jrepair/parser.hpp"
#include "jrepair/printer.hpp"
#include "jrepair/templates.hpp"

namespace jrepair {

std::vector<ViolationRecord> analyze(const SyntaxTree& tree, const ScopeTable& scopes, const std::set<RuleId>& rules) {
  std::vector<ViolationRecord> out;
  for (auto& v : detect_all(tree, scopes, rules)) {
    auto status = check_assumptions(v, tree, scopes);
    out.push_back({std::move(v), std::move(status)});
  }
  return out;
}

std::vector<ViolationRecord> mine_source(std::shared_ptr<const SourceFile> file, const RepairOptions& options) {
  auto tree = parse(std::move(file));
  auto scopes = build_scopes(tree, options.table);
  return analyze(tree, scopes, options.rules);
}

FileRepair repair_source(std::shared_ptr<const SourceFile> file, const RepairOptions& options) {
  FileRepair r;
  r.path = file->path;
  SyntaxTree tree;
  try {
    tree = parse(file);
  } catch (const std::exception& e) {
    r.error = e.what();
    return r;
  }
  auto scopes = build_scopes(tree, options.table);
  r.before = analyze(tree, scopes, options.rules);
  for (std::size_t i = 0; i < r.before.size(); ++i) {
    if (!r.before[i].status.target) continue;
    try {
      r.plans.push_back(fix(r.before[i].violation, tree, scopes));
    } catch (const std::exception& e) {
      r.failed.push_back({i, e.what()});
    }
  }
  auto applied = apply_plans(tree, r.plans);
  r.applied = applied.applied;
  for (auto& d : applied.deferred) r.deferred.push_back({d.plan, d.reason});

  std::string printed;
  try {
    printed = print(applied.edited);
  } catch (const std::exception& e) {
    r.error = std::string("print failed: ") + e.what();
    return r;
  }
  std::vector<FixedEntry> fixed;
  auto sorted = r.applied;
  std::sort(sorted.begin(), sorted.end());
  for (auto i : sorted) fixed.push_back({r.plans[i].rule, r.plans[i].violation.span});
  r.patch = make_patch(file->path, file->text, printed, std::move(fixed));

  if (printed == file->text) {
    for (const auto& rec : r.before) r.after.push_back(rec.violation);
    return r;
  }
  try {
    auto out = std::make_shared<SourceFile>(SourceFile::from_text(file->path, printed));
    auto tree2 = parse(out);
    auto scopes2 = build_scopes(tree2, options.table);
    r.after = detect_all(tree2, scopes2, options.rules);
  } catch (const std::exception& e) {
    r.error = std::string("repaired text does not parse: ") + e.what();
  }
  return r;
}

namespace {

bool excluded(const std::filesystem::path& rel, const std::vector<std::string>& excludes) {
  auto s = rel.generic_string();
  auto name = rel.filename().string();
  for (const auto& g : excludes) {
    if (fnmatch(g.c_str(), s.c_str(), 0) == 0 || fnmatch(g.c_str(), name.c_str(), 0) == 0) return true;
    // a directory pattern excludes everything under it
    for (auto p = rel.parent_path(); !p.empty(); p = p.parent_path())
      if (fnmatch(g.c_str(), p.generic_string().c_str(), 0) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::filesystem::path> discover_java_files(const std::vector<std::filesystem::path>& roots,
                                                       const std::vector<std::string>& excludes) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  for (const auto& root : roots) {
    if (fs::is_regular_file(root)) {
      if (!excluded(root.filename(), excludes)) out.push_back(root);
      continue;
    }
    if (!fs::is_directory(root)) throw std::runtime_error("source root does not exist: " + root.string());
    for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it) {
      if (!it->is_regular_file() || it->path().extension() != ".java") continue;
      if (excluded(fs::relative(it->path(), root), excludes)) continue;
      out.push_back(it->path());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex m;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(m);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace jrepair
