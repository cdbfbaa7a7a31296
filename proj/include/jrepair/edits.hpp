#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "jrepair/rules.hpp"
#include "jrepair/syntax.hpp"

namespace jrepair {

/// Position-indexed view of the original fragments, separate from the syntax
/// tree. Documentary text lives in the gaps between sibling fragments.
class FragmentTree {
 public:
  struct Fragment {
    std::uint32_t start = 0;
    std::uint32_t end = 0;
  };

  explicit FragmentTree(const SyntaxTree& tree);

  const Fragment& fragment(NodeId id) const { return fragments_.at(id); }
  std::size_t size() const { return fragments_.size(); }

  /// Flags `id` as structurally edited and its ancestors as containing an edit.
  void mark_edited(NodeId id);
  bool self_edited(NodeId id) const { return self_.at(id) != 0; }
  bool dirty(NodeId id) const { return self_.at(id) != 0 || below_.at(id) != 0; }
  std::size_t dirty_count() const;

 private:
  const SyntaxTree* tree_;
  std::vector<Fragment> fragments_;
  std::vector<std::uint8_t> self_;
  std::vector<std::uint8_t> below_;
};

/// Synthesized code: literal text interleaved with references to (possibly
/// edited) original nodes. Newlines take the indentation of the insertion point.
struct Piece {
  enum class Kind : std::uint8_t { Text, Ref, RefChildren, Newline, Indent, Dedent };
  Kind kind = Kind::Text;
  std::string text;
  NodeId node = kNoNode;
  std::uint32_t from = 0;  // child index range [from, to) for RefChildren
  std::uint32_t to = 0;
};

class Payload {
 public:
  Payload& text(std::string_view s);
  Payload& ref(NodeId id);
  Payload& ref_children(NodeId id, std::uint32_t from, std::uint32_t to);
  Payload& newline();
  Payload& indent();
  Payload& dedent();

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::vector<NodeId> refs() const;
  bool operator==(const Payload& o) const;

 private:
  std::vector<Piece> pieces_;
};

enum class EditKind : std::uint8_t {
  ReplaceNode,
  InsertBefore,
  InsertAfter,
  InsertIntoBlockStart,
  InsertInline,
  RemoveStatement,
  WrapStatements,
  AddField,
  AddMethod,
  AddImport,
};

std::string_view edit_kind_name(EditKind k);

/// Where an edit lands relative to its anchor.
enum class Placement : std::uint8_t { Replace, LineBefore, LineAfter, BlockStart, InlineAfter, Remove, Wrap, Import };

struct TreeEdit {
  EditKind kind = EditKind::ReplaceNode;
  Placement placement = Placement::Replace;
  NodeId anchor = kNoNode;
  NodeId last = kNoNode;  // last absorbed statement (wraps)
  Payload payload;
  std::string key;  // dedupe key for fields, methods, imports

  static TreeEdit replace(NodeId anchor, Payload p);
  static TreeEdit insert_before(NodeId sibling, Payload p, EditKind kind = EditKind::InsertBefore);
  static TreeEdit insert_after(NodeId sibling, Payload p, EditKind kind = EditKind::InsertAfter);
  static TreeEdit block_start(NodeId block, Payload p, EditKind kind = EditKind::InsertIntoBlockStart);
  static TreeEdit inline_after(NodeId token, Payload p);
  static TreeEdit remove(NodeId stmt);
  static TreeEdit wrap(NodeId first, NodeId last, Payload header);
  static TreeEdit add_import(std::string qualified);
};

struct FixPlan {
  Violation violation;
  RuleId rule = RuleId::S1217;
  std::vector<TreeEdit> edits;
};

/// Where added imports go: before the first larger import when the existing
/// ones are sorted, after the last import, after the package declaration, or
/// at the top of the file (after any leading header comment).
struct ImportSite {
  enum class Mode : std::uint8_t { BeforeImport, AfterImport, AfterPackage, FileStart };
  Mode mode = Mode::FileStart;
  std::uint32_t offset = 0;  // byte offset the import lines are inserted at
  NodeId before = kNoNode;   // BeforeImport: the import the new line precedes
};
/// Site for `name` (a qualified import name); empty name: the block site.
ImportSite import_site(const SyntaxTree& tree, const std::string& name = {});

struct LineRange {
  std::uint32_t first = 0;  // 1-based, inclusive
  std::uint32_t last = 0;
};

/// Original lines a plan may touch: anchors, insertion points, import position.
std::vector<LineRange> plan_footprint(const SyntaxTree& tree, const FixPlan& plan);

class ConflictDeferred : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overlay of accepted edits on an immutable syntax tree.
class EditedTree {
 public:
  explicit EditedTree(const SyntaxTree& tree) : tree_(&tree), fragments_(tree) {}

  const SyntaxTree& tree() const { return *tree_; }
  const FragmentTree& fragments() const { return fragments_; }

  /// Registers an edit without conflict checks.
  void add(const TreeEdit& edit);

  const Payload* replacement(NodeId id) const;
  bool removed(NodeId id) const { return removed_.count(id) > 0; }
  const TreeEdit* wrap_at(NodeId first) const;
  std::vector<const TreeEdit*> insertions(Placement placement, NodeId anchor) const;
  const std::vector<std::string>& imports() const { return imports_; }
  bool empty() const { return edits_.empty(); }
  std::size_t edit_count() const { return edits_.size(); }

 private:
  const SyntaxTree* tree_;
  FragmentTree fragments_;
  std::vector<TreeEdit> edits_;
  std::unordered_map<NodeId, std::size_t> replaced_;
  std::set<NodeId> removed_;
  std::unordered_map<NodeId, std::size_t> wraps_;
  std::map<std::pair<Placement, NodeId>, std::vector<std::size_t>> inserts_;
  std::vector<std::string> imports_;
};

struct ApplyResult {
  struct Deferred {
    std::size_t plan = 0;
    std::string reason;
  };
  EditedTree edited;
  std::vector<std::size_t> applied;  // indices into the input plan list, in application order
  std::vector<Deferred> deferred;
};

/// Applies plans in span order; a plan conflicting with an earlier one is deferred.
ApplyResult apply_plans(const SyntaxTree& tree, const std::vector<FixPlan>& plans);

}  // namespace jrepair
