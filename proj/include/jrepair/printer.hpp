#pragma once

#include <stdexcept>
#include <string>

#include "jrepair/edits.hpp"

namespace jrepair {

class PrintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dominant indentation step of the file: a tab, or 2/3/4/8 spaces (4 when unclear).
std::string infer_indent_unit(std::string_view text);

enum class PrintMode {
  Reuse,    // clean subtrees are copied as one fragment
  Descend,  // every node is rebuilt from its children and gaps (fidelity check)
};

/// Reprints the edited tree. Clean nodes copy their original bytes; edited
/// regions are synthesized with the file's indentation and newline style.
std::string print(const EditedTree& edited, PrintMode mode = PrintMode::Reuse);

}  // namespace jrepair
