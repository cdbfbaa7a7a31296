#include "jrepair/edits.hpp"

#include <algorithm>
#include <numeric>

namespace jrepair {

// ---- FragmentTree ----

FragmentTree::FragmentTree(const SyntaxTree& tree)
    : tree_(&tree), fragments_(tree.size()), self_(tree.size(), 0), below_(tree.size(), 0) {
  for (NodeId id = 0; id < tree.size(); ++id) fragments_[id] = {tree.node(id).start, tree.node(id).end};
}

void FragmentTree::mark_edited(NodeId id) {
  self_.at(id) = 1;
  for (auto p = tree_->node(id).parent; p != kNoNode && !below_[p]; p = tree_->node(p).parent) below_[p] = 1;
}

std::size_t FragmentTree::dirty_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < self_.size(); ++i) n += (self_[i] || below_[i]) ? 1 : 0;
  return n;
}

// ---- Payload ----

Payload& Payload::text(std::string_view s) {
  if (!pieces_.empty() && pieces_.back().kind == Piece::Kind::Text) {
    pieces_.back().text += s;
  } else {
    Piece p;
    p.text = std::string(s);
    pieces_.push_back(std::move(p));
  }
  return *this;
}

Payload& Payload::ref(NodeId id) {
  Piece p;
  p.kind = Piece::Kind::Ref;
  p.node = id;
  pieces_.push_back(p);
  return *this;
}

Payload& Payload::ref_children(NodeId id, std::uint32_t from, std::uint32_t to) {
  Piece p;
  p.kind = Piece::Kind::RefChildren;
  p.node = id;
  p.from = from;
  p.to = to;
  pieces_.push_back(p);
  return *this;
}

namespace {
Piece marker(Piece::Kind k) {
  Piece p;
  p.kind = k;
  return p;
}
}  // namespace

Payload& Payload::newline() {
  pieces_.push_back(marker(Piece::Kind::Newline));
  return *this;
}
Payload& Payload::indent() {
  pieces_.push_back(marker(Piece::Kind::Indent));
  return *this;
}
Payload& Payload::dedent() {
  pieces_.push_back(marker(Piece::Kind::Dedent));
  return *this;
}

std::vector<NodeId> Payload::refs() const {
  std::vector<NodeId> out;
  for (const auto& p : pieces_)
    if (p.kind == Piece::Kind::Ref || p.kind == Piece::Kind::RefChildren) out.push_back(p.node);
  return out;
}

bool Payload::operator==(const Payload& o) const {
  if (pieces_.size() != o.pieces_.size()) return false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& a = pieces_[i];
    const auto& b = o.pieces_[i];
    if (a.kind != b.kind || a.text != b.text || a.node != b.node || a.from != b.from || a.to != b.to) return false;
  }
  return true;
}

// ---- TreeEdit ----

std::string_view edit_kind_name(EditKind k) {
  switch (k) {
    case EditKind::ReplaceNode: return "replace-node";
    case EditKind::InsertBefore: return "insert-before";
    case EditKind::InsertAfter: return "insert-after";
    case EditKind::InsertIntoBlockStart: return "insert-into-block-start";
    case EditKind::InsertInline: return "insert-inline";
    case EditKind::RemoveStatement: return "remove-statement";
    case EditKind::WrapStatements: return "wrap-statements";
    case EditKind::AddField: return "add-field";
    case EditKind::AddMethod: return "add-method";
    case EditKind::AddImport: return "add-import";
  }
  return "?";
}

TreeEdit TreeEdit::replace(NodeId anchor, Payload p) {
  return {EditKind::ReplaceNode, Placement::Replace, anchor, kNoNode, std::move(p), {}};
}
TreeEdit TreeEdit::insert_before(NodeId sibling, Payload p, EditKind kind) {
  return {kind, Placement::LineBefore, sibling, kNoNode, std::move(p), {}};
}
TreeEdit TreeEdit::insert_after(NodeId sibling, Payload p, EditKind kind) {
  return {kind, Placement::LineAfter, sibling, kNoNode, std::move(p), {}};
}
TreeEdit TreeEdit::block_start(NodeId block, Payload p, EditKind kind) {
  return {kind, Placement::BlockStart, block, kNoNode, std::move(p), {}};
}
TreeEdit TreeEdit::inline_after(NodeId token, Payload p) {
  return {EditKind::InsertInline, Placement::InlineAfter, token, kNoNode, std::move(p), {}};
}
TreeEdit TreeEdit::remove(NodeId stmt) { return {EditKind::RemoveStatement, Placement::Remove, stmt, kNoNode, {}, {}}; }
TreeEdit TreeEdit::wrap(NodeId first, NodeId last, Payload header) {
  return {EditKind::WrapStatements, Placement::Wrap, first, last, std::move(header), {}};
}
TreeEdit TreeEdit::add_import(std::string qualified) {
  TreeEdit e{EditKind::AddImport, Placement::Import, kNoNode, kNoNode, {}, {}};
  e.key = std::move(qualified);
  return e;
}

// ---- import site ----

namespace {

// "java.util.List" for `import java.util.List;`, empty for static imports.
std::string import_name(const SyntaxTree& tree, NodeId decl) {
  std::string out;
  bool first = true;
  for (auto c : tree.node(decl).children) {
    if (!tree.is_token(c)) {
      out += tree.text(c);
      continue;
    }
    auto t = tree.text(c);
    if (first) {
      first = false;
      continue;  // `import`
    }
    if (t == "static") return {};
    if (t != ";") out += t;
  }
  std::erase_if(out, [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; });
  return out;
}

}  // namespace

ImportSite import_site(const SyntaxTree& tree, const std::string& name) {
  const auto& root = tree.node(tree.root);
  ImportSite site;
  if (!name.empty()) {
    std::vector<std::pair<std::string, NodeId>> imports;
    for (auto c : root.children)
      if (tree.kind(c) == NodeKind::ImportDecl)
        if (auto n = import_name(tree, c); !n.empty()) imports.emplace_back(n, c);
    bool sorted = std::is_sorted(imports.begin(), imports.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
    if (sorted)
      for (const auto& [n, c] : imports)
        if (name < n) return {ImportSite::Mode::BeforeImport, tree.node(c).start, c};
  }
  for (auto c : root.children) {
    auto k = tree.kind(c);
    if (k == NodeKind::ImportDecl) {
      site = {ImportSite::Mode::AfterImport, tree.node(c).end};
    } else if (k == NodeKind::PackageDecl && site.mode != ImportSite::Mode::AfterImport) {
      site = {ImportSite::Mode::AfterPackage, tree.node(c).end};
    }
  }
  if (site.mode != ImportSite::Mode::FileStart) return site;
  // Leading header: insert after the last blank line outside comments.
  std::uint32_t gap_end = root.children.empty() ? root.end : tree.node(root.children.front()).start;
  const auto& t = tree.file_text();
  site.offset = root.start;
  bool blank = true;
  for (std::uint32_t i = root.start; i < gap_end; ++i) {
    char c = t[i];
    if (c == '/' && i + 1 < gap_end && t[i + 1] == '*') {
      auto close = t.find("*/", i + 2);
      i = close == std::string::npos ? gap_end : static_cast<std::uint32_t>(close + 1);
      blank = false;
    } else if (c == '/' && i + 1 < gap_end && t[i + 1] == '/') {
      while (i + 1 < gap_end && t[i + 1] != '\n' && t[i + 1] != '\r') ++i;
      blank = false;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < gap_end && t[i + 1] == '\n') ++i;
      if (blank && i + 1 > root.start) site.offset = i + 1;
      blank = true;
    } else if (c != ' ' && c != '\t' && c != '\f') {
      blank = false;
    }
  }
  // A header without a blank line after it: imports go on top
  if (site.offset != root.start) {
    // only keep when some comment precedes the blank line
    bool comment = tree.text(root.start, site.offset).find('/') != std::string_view::npos;
    if (!comment) site.offset = root.start;
  }
  return site;
}

// ---- footprint ----

std::vector<LineRange> plan_footprint(const SyntaxTree& tree, const FixPlan& plan) {
  std::vector<LineRange> out;
  const auto& lines = tree.source->lines;
  auto line = [&](std::uint32_t off) { return lines.line_of(off); };
  for (const auto& e : plan.edits) {
    switch (e.placement) {
      case Placement::Replace:
      case Placement::BlockStart:
      case Placement::Remove:
      case Placement::InlineAfter:
        out.push_back({line(tree.node(e.anchor).start), line(tree.node(e.anchor).end)});
        break;
      case Placement::LineBefore: {
        // the new line goes right after the previous sibling's line
        const auto& n = tree.node(e.anchor);
        auto idx = tree.index_in_parent(e.anchor);
        const auto& sibs = tree.node(n.parent).children;
        std::uint32_t prev_end = idx > 0 ? tree.node(sibs[idx - 1]).end : n.start;
        out.push_back({line(prev_end), line(n.start)});
        break;
      }
      case Placement::LineAfter: {
        auto l = line(tree.node(e.anchor).end);
        out.push_back({l, l + 1});
        break;
      }
      case Placement::Wrap:
        out.push_back({line(tree.node(e.anchor).start), line(tree.node(e.last).end) + 1});
        break;
      case Placement::Import: {
        auto at = line(import_site(tree, e.key).offset);
        out.push_back({at > 1 ? at - 1 : at, at + 1});
        break;
      }
    }
  }
  return out;
}

// ---- EditedTree ----

void EditedTree::add(const TreeEdit& edit) {
  auto idx = edits_.size();
  edits_.push_back(edit);
  const auto& e = edits_.back();
  switch (e.placement) {
    case Placement::Replace:
      replaced_[e.anchor] = idx;
      fragments_.mark_edited(e.anchor);
      break;
    case Placement::Remove:
      removed_.insert(e.anchor);
      fragments_.mark_edited(tree_->node(e.anchor).parent);
      break;
    case Placement::Wrap:
      wraps_[e.anchor] = idx;
      fragments_.mark_edited(tree_->node(e.anchor).parent);
      break;
    case Placement::LineBefore:
    case Placement::LineAfter:
    case Placement::InlineAfter:
      inserts_[{e.placement, e.anchor}].push_back(idx);
      fragments_.mark_edited(tree_->node(e.anchor).parent);
      break;
    case Placement::BlockStart:
      inserts_[{e.placement, e.anchor}].push_back(idx);
      fragments_.mark_edited(e.anchor);
      break;
    case Placement::Import:
      if (std::find(imports_.begin(), imports_.end(), e.key) == imports_.end()) imports_.push_back(e.key);
      std::sort(imports_.begin(), imports_.end());
      fragments_.mark_edited(tree_->root);
      break;
  }
}

const Payload* EditedTree::replacement(NodeId id) const {
  auto it = replaced_.find(id);
  return it == replaced_.end() ? nullptr : &edits_[it->second].payload;
}

const TreeEdit* EditedTree::wrap_at(NodeId first) const {
  auto it = wraps_.find(first);
  return it == wraps_.end() ? nullptr : &edits_[it->second];
}

std::vector<const TreeEdit*> EditedTree::insertions(Placement placement, NodeId anchor) const {
  std::vector<const TreeEdit*> out;
  auto it = inserts_.find({placement, anchor});
  if (it == inserts_.end()) return out;
  for (auto i : it->second) out.push_back(&edits_[i]);
  return out;
}

// ---- conflict policy ----

namespace {

struct WrapRange {
  NodeId block;
  std::size_t first, last;
  RuleId rule;
};

class ConflictState {
 public:
  explicit ConflictState(const SyntaxTree& tree) : tree_(tree) {}

  // Reason the plan cannot be applied on top of the accepted ones, or empty.
  std::string check(const FixPlan& plan) const {
    for (const auto& e : plan.edits) {
      auto why = check_edit(e);
      if (!why.empty()) return why;
    }
    return {};
  }

  // Records the plan; returns the edits to register (duplicates dropped).
  std::vector<TreeEdit> commit(const FixPlan& plan) {
    std::vector<TreeEdit> out;
    for (const auto& e : plan.edits) {
      if (!e.key.empty()) {
        if (keys_.count(e.key)) continue;
        keys_[e.key] = e.payload;
      }
      switch (e.placement) {
        case Placement::Replace: replaced_[e.anchor] = {e.payload.refs(), plan.rule}; break;
        case Placement::Remove: removed_[e.anchor] = plan.rule; break;
        case Placement::LineBefore:
        case Placement::LineAfter: siblings_[e.anchor] = plan.rule; break;
        case Placement::Wrap: {
          auto block = tree_.node(e.anchor).parent;
          wraps_.push_back({block, tree_.index_in_parent(e.anchor), tree_.index_in_parent(e.last), plan.rule});
          break;
        }
        default: break;
      }
      out.push_back(e);
    }
    return out;
  }

 private:
  struct Replaced {
    std::vector<NodeId> refs;
    RuleId rule;
  };

  bool ancestor_or_self(NodeId anc, NodeId id) const { return anc == id || tree_.is_ancestor(anc, id); }

  bool refs_cover(const std::vector<NodeId>& refs, NodeId inner) const {
    return std::any_of(refs.begin(), refs.end(), [&](NodeId r) { return ancestor_or_self(r, inner); });
  }

  static std::string by(RuleId r) { return " (held by " + std::string(rule_key(r)) + ")"; }

  const WrapRange* wrap_containing(NodeId stmt) const {
    auto parent = tree_.node(stmt).parent;
    if (parent == kNoNode) return nullptr;
    for (const auto& w : wraps_) {
      if (w.block != parent) continue;
      auto idx = tree_.index_in_parent(stmt);
      if (idx >= w.first && idx <= w.last) return &w;
    }
    return nullptr;
  }

  std::string check_edit(const TreeEdit& e) const {
    if (!e.key.empty()) {
      auto it = keys_.find(e.key);
      if (it != keys_.end() && !(it->second == e.payload)) return "conflicting declaration for " + e.key;
      return {};
    }
    switch (e.placement) {
      case Placement::Replace: {
        if (auto it = replaced_.find(e.anchor); it != replaced_.end())
          return "anchor already replaced" + by(it->second.rule);
        for (const auto& [node, rep] : replaced_) {
          if (tree_.is_ancestor(node, e.anchor) && !refs_cover(rep.refs, e.anchor))
            return "enclosing node rewritten" + by(rep.rule);
          if (tree_.is_ancestor(e.anchor, node) && !refs_cover(e.payload.refs(), node))
            return "replacement would drop an edited node" + by(rep.rule);
        }
        for (const auto& [node, rule] : removed_)
          if (ancestor_or_self(node, e.anchor)) return "anchor removed" + by(rule);
        for (const auto& w : wraps_) {
          const auto& stmts = tree_.node(w.block).children;
          if (e.anchor == w.block || ancestor_or_self(e.anchor, w.block)) return "enclosing block wrapped" + by(w.rule);
          for (std::size_t i = w.first; i <= w.last; ++i)
            if (stmts[i] == e.anchor && i == w.first) return "anchor is a wrapped resource declaration" + by(w.rule);
        }
        return {};
      }
      case Placement::LineBefore:
      case Placement::LineAfter:
      case Placement::Remove: {
        if (auto it = removed_.find(e.anchor); it != removed_.end()) return "anchor removed" + by(it->second);
        if (auto* w = wrap_containing(e.anchor)) return "anchor absorbed by a wrap" + by(w->rule);
        if (e.placement == Placement::Remove) {
          if (auto it = replaced_.find(e.anchor); it != replaced_.end()) return "anchor replaced" + by(it->second.rule);
          if (auto it = siblings_.find(e.anchor); it != siblings_.end()) return "anchor has insertions" + by(it->second);
          for (const auto& [node, rep] : replaced_)
            if (tree_.is_ancestor(e.anchor, node)) return "removed statement contains a replacement" + by(rep.rule);
        }
        for (const auto& [node, rep] : replaced_)
          if (tree_.is_ancestor(node, e.anchor) && !refs_cover(rep.refs, e.anchor))
            return "enclosing node rewritten" + by(rep.rule);
        return {};
      }
      case Placement::Wrap: {
        auto block = tree_.node(e.anchor).parent;
        auto first = tree_.index_in_parent(e.anchor);
        auto last = tree_.index_in_parent(e.last);
        for (const auto& w : wraps_)
          if (w.block == block && !(last < w.first || w.last < first)) return "overlapping wrap" + by(w.rule);
        const auto& stmts = tree_.node(block).children;
        for (std::size_t i = first; i <= last; ++i) {
          if (auto it = siblings_.find(stmts[i]); it != siblings_.end()) return "wrapped statement has insertions" + by(it->second);
          if (auto it = removed_.find(stmts[i]); it != removed_.end()) return "wrapped statement removed" + by(it->second);
        }
        if (auto it = replaced_.find(e.anchor); it != replaced_.end()) return "resource declaration replaced" + by(it->second.rule);
        for (const auto& [node, rep] : replaced_)
          if (ancestor_or_self(node, block)) return "enclosing node rewritten" + by(rep.rule);
        return {};
      }
      default: return {};
    }
  }

  const SyntaxTree& tree_;
  std::map<NodeId, Replaced> replaced_;
  std::map<NodeId, RuleId> removed_;
  std::map<NodeId, RuleId> siblings_;
  std::vector<WrapRange> wraps_;
  std::map<std::string, Payload> keys_;
};

}  // namespace

ApplyResult apply_plans(const SyntaxTree& tree, const std::vector<FixPlan>& plans) {
  ApplyResult result{EditedTree(tree), {}, {}};
  std::vector<std::size_t> order(plans.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = plans[a].violation.span;
    const auto& y = plans[b].violation.span;
    if (x.start != y.start) return x.start < y.start;
    if (x.end != y.end) return x.end < y.end;
    return plans[a].rule < plans[b].rule;
  });
  ConflictState state(tree);
  for (auto i : order) {
    auto why = state.check(plans[i]);
    if (!why.empty()) {
      result.deferred.push_back({i, why});
      continue;
    }
    for (const auto& e : state.commit(plans[i])) result.edited.add(e);
    result.applied.push_back(i);
  }
  return result;
}

}  // namespace jrepair
