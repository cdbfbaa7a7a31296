#include "jrepair/lexer.hpp"

#include <algorithm>
#include <array>

namespace jrepair {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",       "catch",        "char",
    "class",    "const",      "continue",  "default",   "do",       "double",     "else",         "enum",
    "extends",  "final",      "finally",   "float",     "for",      "goto",       "if",           "implements",
    "import",   "instanceof", "int",       "interface", "long",     "native",     "new",          "package",
    "private",  "protected",  "public",    "return",    "short",    "static",     "strictfp",     "super",
    "switch",   "synchronized", "this",    "throw",     "throws",   "transient",  "try",          "void",
    "volatile", "while",      "true",      "false",     "null"};

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_hex(unsigned char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

class Lexer {
 public:
  explicit Lexer(const SourceFile& file) : file_(file), text_(file.text) {}

  std::vector<Token> run() {
    while (pos_ < text_.size()) lex_one();
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& what, std::uint32_t start) const {
    auto end = static_cast<std::uint32_t>(std::min(text_.size(), pos_ + 1));
    Span s = file_.lines.span(start, std::max(start, end));
    throw LexError(file_.path.string() + ":" + std::to_string(s.start_line) + ":" + std::to_string(s.start_col) +
                       ": " + what,
                   s);
  }

  void emit(TokenKind kind, std::size_t start) {
    out_.push_back({kind, static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(pos_)});
  }

  void lex_one() {
    std::size_t start = pos_;
    auto c = static_cast<unsigned char>(peek());
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == 0x1A) {
      while (pos_ < text_.size()) {
        auto d = static_cast<unsigned char>(text_[pos_]);
        if (d == ' ' || d == '\t' || d == '\n' || d == '\r' || d == '\f' || d == 0x1A) {
          ++pos_;
        } else {
          break;
        }
      }
      emit(TokenKind::Whitespace, start);
      return;
    }
    // byte order mark at the very start counts as whitespace
    if (start == 0 && text_.substr(0, 3) == "\xEF\xBB\xBF") {
      pos_ = 3;
      emit(TokenKind::Whitespace, start);
      return;
    }
    if (c == '/' && peek(1) == '/') {
      while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '\r') ++pos_;
      emit(TokenKind::LineComment, start);
      return;
    }
    if (c == '/' && peek(1) == '*') {
      auto close = text_.find("*/", pos_ + 2);
      if (close == std::string_view::npos) fail("unterminated block comment", static_cast<std::uint32_t>(start));
      pos_ = close + 2;
      emit(TokenKind::BlockComment, start);
      return;
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_part(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      auto word = text_.substr(start, pos_ - start);
      emit(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start);
      return;
    }
    if (is_digit(c) || (c == '.' && is_digit(static_cast<unsigned char>(peek(1))))) {
      lex_number(start);
      return;
    }
    if (c == '"') {
      if (text_.substr(pos_, 3) == "\"\"\"") {
        lex_text_block(start);
      } else {
        lex_quoted('"', TokenKind::StringLiteral, start);
      }
      return;
    }
    if (c == '\'') {
      lex_quoted('\'', TokenKind::CharLiteral, start);
      return;
    }
    lex_punct(start);
  }

  void lex_number(std::size_t start) {
    bool floating = false;
    auto digits = [&](auto pred) {
      while (pos_ < text_.size() && (pred(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    };
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      pos_ += 2;
      digits(is_hex);
      if (peek() == '.') {
        floating = true;
        ++pos_;
        digits(is_hex);
      }
      if (peek() == 'p' || peek() == 'P') {
        floating = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        digits(is_digit);
      }
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
      pos_ += 2;
      digits([](unsigned char d) { return d == '0' || d == '1'; });
    } else {
      digits(is_digit);
      if (peek() == '.' && is_digit(static_cast<unsigned char>(peek(1)))) {
        floating = true;
        ++pos_;
        digits(is_digit);
      } else if (peek() == '.' && (peek(1) == 'e' || peek(1) == 'E') &&
                 (is_digit(static_cast<unsigned char>(peek(2))) || peek(2) == '+' || peek(2) == '-')) {
        floating = true;
        ++pos_;
      } else if (peek() == '.' && !ident_start(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        // "1." is a double literal; "1.foo" is not Java anyway
        floating = true;
        ++pos_;
      }
      if (peek() == 'e' || peek() == 'E') {
        floating = true;
        ++pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        digits(is_digit);
      }
    }
    char suffix = peek();
    if (suffix == 'L' || suffix == 'l') {
      ++pos_;
      emit(TokenKind::LongLiteral, start);
    } else if (suffix == 'f' || suffix == 'F') {
      ++pos_;
      emit(TokenKind::FloatLiteral, start);
    } else if (suffix == 'd' || suffix == 'D') {
      ++pos_;
      emit(TokenKind::DoubleLiteral, start);
    } else {
      emit(floating ? TokenKind::DoubleLiteral : TokenKind::IntLiteral, start);
    }
    if (pos_ < text_.size() && ident_part(static_cast<unsigned char>(text_[pos_])))
      fail("malformed numeric literal", static_cast<std::uint32_t>(start));
  }

  void lex_quoted(char quote, TokenKind kind, std::size_t start) {
    ++pos_;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n' || text_[pos_] == '\r') {
        fail(quote == '"' ? "unterminated string literal" : "unterminated character literal",
             static_cast<std::uint32_t>(start));
      }
      char ch = text_[pos_];
      if (ch == '\\') {
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (ch == quote) break;
    }
    emit(kind, start);
  }

  void lex_text_block(std::size_t start) {
    pos_ += 3;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated text block", static_cast<std::uint32_t>(start));
      if (text_[pos_] == '\\') {
        pos_ += 2;
        continue;
      }
      if (text_.substr(pos_, 3) == "\"\"\"") {
        pos_ += 3;
        break;
      }
      ++pos_;
    }
    emit(TokenKind::TextBlock, start);
  }

  void lex_punct(std::size_t start) {
    // longest match first; '>' is always a single token
    static constexpr std::array<std::string_view, 45> kPuncts = {
        "<<=", "...", "->", "::", "==", "!=", "<=", "<<", "&&", "||", "++", "--", "+=", "-=", "*=",
        "/=",  "&=",  "|=", "^=", "%=", "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",  ".",  "@",
        "=",   "<",   ">",  "!",  "~",  "?",  ":",  "+",  "-",  "*",  "/",  "&",  "|",  "^",  "%"};
    for (auto p : kPuncts) {
      if (text_.substr(pos_, p.size()) == p) {
        pos_ += p.size();
        emit(TokenKind::Punct, start);
        return;
      }
    }
    fail("illegal character", static_cast<std::uint32_t>(start));
  }

  const SourceFile& file_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Token> out_;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(const SourceFile& file) { return Lexer(file).run(); }

}  // namespace jrepair
