#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jrepair/rules.hpp"

namespace jrepair {

struct Hunk {
  std::size_t old_start = 0;  // 0-based line index
  std::size_t old_count = 0;
  std::size_t new_start = 0;
  std::size_t new_count = 0;
  std::vector<std::string> lines;  // ' ', '-', '+' prefixed, terminators kept
};

/// Line diff with `context` lines around each change. Lines keep their own
/// terminators, so CRLF files produce CRLF hunk bodies.
std::vector<Hunk> diff_lines(std::string_view a, std::string_view b, std::size_t context = 3);

/// Unified diff text; empty when the inputs are equal.
std::string unified_diff(std::string_view a, std::string_view b, const std::string& a_label, const std::string& b_label,
                         std::size_t context = 3);

class PatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies a unified diff produced by unified_diff (no fuzz).
std::string apply_patch(std::string_view original, std::string_view diff);

struct FixedEntry {
  RuleId rule;
  Span span;
};

struct PatchArtifact {
  std::filesystem::path path;
  std::string original;
  std::string patched;
  std::string diff;
  std::vector<FixedEntry> summary;
};

PatchArtifact make_patch(const std::filesystem::path& path, std::string original, std::string patched,
                         std::vector<FixedEntry> fixed);

/// 1-based original lines removed and insertion points of added lines, per hunk.
/// Lines added directly after removed ones count as a replacement and have
/// no insertion point of their own.
struct LineChanges {
  std::vector<std::size_t> removed;          // original line numbers
  std::vector<std::size_t> inserted_before;  // original line number the added block precedes
};
LineChanges changed_lines(std::string_view a, std::string_view b);

}  // namespace jrepair
