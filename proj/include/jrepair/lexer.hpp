#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jrepair/source.hpp"

namespace jrepair {

enum class TokenKind : std::uint8_t {
  Identifier,
  Keyword,
  IntLiteral,
  LongLiteral,
  FloatLiteral,
  DoubleLiteral,
  CharLiteral,
  StringLiteral,
  TextBlock,
  Punct,
  // documentary tokens
  Whitespace,
  LineComment,
  BlockComment,
};

struct Token {
  TokenKind kind;
  std::uint32_t start;
  std::uint32_t end;

  bool documentary() const {
    return kind == TokenKind::Whitespace || kind == TokenKind::LineComment || kind == TokenKind::BlockComment;
  }
  bool literal() const { return kind >= TokenKind::IntLiteral && kind <= TokenKind::TextBlock; }
};

class LexError : public std::runtime_error {
 public:
  LexError(std::string message, Span span) : std::runtime_error(std::move(message)), span(span) {}
  Span span;
};

/// Splits the whole file into tokens, documentary ones included.
/// Every `>` is its own token so that generic closers and shift operators
/// can be told apart by the parser (adjacent `>` tokens form `>>`, `>=`...).
std::vector<Token> tokenize(const SourceFile& file);

bool is_java_keyword(std::string_view word);

}  // namespace jrepair
