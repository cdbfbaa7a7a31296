#pragma once

#include <memory>

#include "jrepair/source.hpp"
#include "jrepair/syntax.hpp"

namespace jrepair {

struct ParseOptions {
  /// When set, a malformed member, statement or type declaration becomes a
  /// verbatim node instead of failing the whole file.
  bool recover = true;
};

/// Parses Java 11 source. Constructs outside the supported subset (records,
/// sealed types, arrow switches, annotation type declarations, modules) are
/// kept as verbatim nodes. Throws LexError or ParseError.
SyntaxTree parse(std::shared_ptr<const SourceFile> file, ParseOptions options = {});
SyntaxTree parse(const SourceFile& file, ParseOptions options = {});

}  // namespace jrepair
