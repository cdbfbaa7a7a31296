#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jrepair {

enum class NewlineStyle { LF, CRLF, Mixed };

/// Byte range plus 1-based line/column positions. Columns count bytes.
struct Span {
  std::uint32_t start = 0;
  std::uint32_t end = 0;
  std::uint32_t start_line = 1;
  std::uint32_t start_col = 1;
  std::uint32_t end_line = 1;
  std::uint32_t end_col = 1;

  bool contains(const Span& other) const { return start <= other.start && other.end <= end; }
  bool operator==(const Span& o) const { return start == o.start && end == o.end; }
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps byte offsets to line/column. Line terminators are \n, \r\n and a lone \r.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);

  std::uint32_t line_of(std::uint32_t offset) const;
  std::uint32_t col_of(std::uint32_t offset) const;
  std::uint32_t line_start(std::uint32_t line) const { return starts_.at(line - 1); }
  std::uint32_t line_count() const { return static_cast<std::uint32_t>(starts_.size()); }
  Span span(std::uint32_t start, std::uint32_t end) const;

 private:
  std::vector<std::uint32_t> starts_{0};
};

/// One Java source file held as its exact bytes.
struct SourceFile {
  std::filesystem::path path;
  std::string text;
  NewlineStyle newline_style = NewlineStyle::LF;
  bool trailing_newline = false;
  LineIndex lines;

  /// Throws DecodeError when `text` is not valid UTF-8.
  static SourceFile from_text(std::filesystem::path path, std::string text);
  static SourceFile load(const std::filesystem::path& path);

  /// Newline sequence used for synthesized lines ("\r\n" when CRLF dominates).
  std::string_view newline() const;
};

bool is_valid_utf8(std::string_view bytes);
NewlineStyle detect_newline_style(std::string_view text);

}  // namespace jrepair
