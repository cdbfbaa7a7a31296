#include "jrepair/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace jrepair {

LineIndex::LineIndex(std::string_view text) {
  for (std::uint32_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      starts_.push_back(i + 1);
    } else if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      starts_.push_back(i + 1);
    }
  }
}

std::uint32_t LineIndex::line_of(std::uint32_t offset) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  return static_cast<std::uint32_t>(it - starts_.begin());
}

std::uint32_t LineIndex::col_of(std::uint32_t offset) const {
  return offset - starts_[line_of(offset) - 1] + 1;
}

Span LineIndex::span(std::uint32_t start, std::uint32_t end) const {
  Span s;
  s.start = start;
  s.end = end;
  s.start_line = line_of(start);
  s.start_col = col_of(start);
  s.end_line = line_of(end);
  s.end_col = col_of(end);
  return s;
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    auto c = static_cast<unsigned char>(bytes[i]);
    std::size_t extra;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= bytes.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // overlong forms and surrogates
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000)) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

NewlineStyle detect_newline_style(std::string_view text) {
  std::size_t lf = 0, crlf = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      ++crlf;
      ++i;
    } else if (text[i] == '\n' || text[i] == '\r') {
      ++lf;
    }
  }
  if (crlf > 0 && lf > 0) return NewlineStyle::Mixed;
  return crlf > 0 ? NewlineStyle::CRLF : NewlineStyle::LF;
}

SourceFile SourceFile::from_text(std::filesystem::path path, std::string text) {
  if (!is_valid_utf8(text)) throw DecodeError("not valid UTF-8: " + path.string());
  SourceFile f;
  f.path = std::move(path);
  f.text = std::move(text);
  f.newline_style = detect_newline_style(f.text);
  f.trailing_newline = !f.text.empty() && (f.text.back() == '\n' || f.text.back() == '\r');
  f.lines = LineIndex(f.text);
  return f;
}

SourceFile SourceFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(path, ss.str());
}

std::string_view SourceFile::newline() const {
  if (newline_style == NewlineStyle::CRLF) return "\r\n";
  if (newline_style == NewlineStyle::Mixed) {
    std::size_t crlf = 0, other = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        ++crlf;
        ++i;
      } else if (text[i] == '\n') {
        ++other;
      }
    }
    if (crlf > other) return "\r\n";
  }
  return "\n";
}

}  // namespace jrepair
