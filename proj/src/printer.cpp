#include "jrepair/printer.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

namespace jrepair {

namespace {

bool is_nl(char c) { return c == '\n' || c == '\r'; }
bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\f'; }

bool all_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return is_blank(c) || is_nl(c); });
}

std::size_t first_nl(std::string_view s) {
  auto p = s.find_first_of("\r\n");
  return p;
}

// Index just past the line terminator starting at `p`.
std::size_t past_nl(std::string_view s, std::size_t p) {
  if (s[p] == '\r' && p + 1 < s.size() && s[p + 1] == '\n') return p + 2;
  return p + 1;
}

bool has_comment(std::string_view s) { return s.find("//") != s.npos || s.find("/*") != s.npos; }

class Printer {
 public:
  explicit Printer(const EditedTree& edited, PrintMode mode)
      : ed_(edited),
        descend_(mode == PrintMode::Descend),
        tree_(edited.tree()),
        text_(tree_.file_text()),
        nl_(tree_.source->newline()),
        unit_(infer_indent_unit(text_)) {
    for (const auto& name : ed_.imports()) {
      auto site = import_site(tree_, name);
      if (site.mode == ImportSite::Mode::BeforeImport) {
        before_import_[site.before].push_back(name);
      } else {
        block_imports_.push_back(name);
        site_ = import_site(tree_);
      }
    }
  }

  std::string run() {
    emit(tree_.root);
    return std::move(out_);
  }

 private:
  // ---- sinks ----

  // Original bytes; lines started inside a wrap get the extra indentation.
  void write_orig(std::string_view s) {
    for (char c : s) {
      if (is_nl(c)) {
        pending_ = true;
      } else {
        if (pending_) out_ += extra_;
        pending_ = false;
      }
      out_ += c;
    }
  }

  void write_raw(std::string_view s) {
    if (s.empty()) return;
    out_ += s;
    pending_ = is_nl(s.back());
  }

  std::string line_indent(std::uint32_t offset) const {
    auto start = tree_.source->lines.line_start(tree_.source->lines.line_of(offset));
    auto end = start;
    while (end < offset && is_blank(text_[end])) ++end;
    return std::string(text_.substr(start, end - start));
  }

  std::string indent_of(NodeId id) const { return line_indent(tree_.node(id).start) + extra_; }

  // ---- payloads ----

  // `self` is the node the payload replaces; a reference to it prints the original.
  void render(const Payload& p, const std::string& base, bool at_line_start, bool flatten, NodeId self = kNoNode) {
    int level = 0;
    bool line_start = at_line_start;
    bool wrote = false;
    auto flush = [&] {
      if (line_start) {
        out_ += base;
        for (int i = 0; i < level; ++i) out_ += unit_;
        line_start = false;
      }
      pending_ = false;
      wrote = true;
    };
    for (const auto& piece : p.pieces()) {
      switch (piece.kind) {
        case Piece::Kind::Text:
          if (piece.text.empty()) break;
          flush();
          out_ += piece.text;
          break;
        case Piece::Kind::Ref:
          flush();
          check_ref(piece.node);
          emit(piece.node, piece.node == self);
          break;
        case Piece::Kind::RefChildren:
          flush();
          check_ref(piece.node);
          if (piece.from > piece.to || piece.to > tree_.node(piece.node).children.size())
            throw PrintError("child range out of bounds");
          emit_children(piece.node, piece.from, piece.to);
          break;
        case Piece::Kind::Newline:
          if (flatten) {
            if (wrote && !out_.empty() && out_.back() != ' ') out_ += ' ';
          } else {
            out_ += nl_;
            line_start = true;
            pending_ = false;
          }
          break;
        case Piece::Kind::Indent: ++level; break;
        case Piece::Kind::Dedent: level = std::max(0, level - 1); break;
      }
    }
  }

  void check_ref(NodeId id) const {
    if (id >= tree_.size()) throw PrintError("payload references a node outside the tree");
  }

  // ---- tree walk ----

  void emit(NodeId id, bool original = false) {
    if (const auto* p = original ? nullptr : ed_.replacement(id)) {
      render(*p, indent_of(id), false, false, id);
      return;
    }
    const auto& n = tree_.node(id);
    if ((!descend_ && !ed_.fragments().dirty(id)) || n.children.empty()) {
      write_orig(tree_.text(id));
      return;
    }
    emit_children(id, 0, static_cast<std::uint32_t>(n.children.size()));
  }

  void emit_children(NodeId id, std::uint32_t from, std::uint32_t to) {
    const auto& n = tree_.node(id);
    std::uint32_t cursor = from == 0 ? n.start : tree_.node(n.children[from - 1]).end;
    NodeId prev = kNoNode;
    std::size_t i = from;
    while (i < to) i = emit_item(id, i, cursor, prev);
    if (to == n.children.size()) write_gap(cursor, n.end, prev, kNoNode, id);
  }

  // Statements (non-token children) of a block-like node.
  bool has_statements(NodeId block) const {
    const auto& kids = tree_.node(block).children;
    return std::any_of(kids.begin(), kids.end(), [&](NodeId c) { return !tree_.is_token(c); });
  }

  NodeId first_statement(NodeId block) const {
    for (auto c : tree_.node(block).children)
      if (!tree_.is_token(c)) return c;
    return kNoNode;
  }

  std::size_t emit_item(NodeId parent, std::size_t i, std::uint32_t& cursor, NodeId& prev) {
    const auto& kids = tree_.node(parent).children;
    NodeId c = kids[i];
    const auto& cn = tree_.node(c);

    if (ed_.removed(c)) {
      auto g = tree_.text(cursor, cn.start);
      auto lastnl = g.find_last_of("\r\n");
      std::uint32_t after = cn.end;
      bool alone = lastnl != g.npos && all_blank(g.substr(lastnl + 1));
      if (alone) {
        auto next_start = i + 1 < kids.size() ? tree_.node(kids[i + 1]).start : tree_.node(parent).end;
        auto tail = tree_.text(cn.end, next_start);
        auto p = first_nl(tail);
        alone = p != tail.npos && all_blank(tail.substr(0, p));
        if (alone) after = cn.end + static_cast<std::uint32_t>(past_nl(tail, p));
      }
      if (alone) {
        write_gap(cursor, cursor + static_cast<std::uint32_t>(lastnl + 1), prev, kNoNode, parent);
      } else {
        write_gap(cursor, cn.start, prev, kNoNode, parent);
      }
      cursor = after;
      prev = kNoNode;
      return i + 1;
    }

    if (const auto* wrap = ed_.wrap_at(c)) {
      if (tree_.node(wrap->last).parent != parent) throw PrintError("wrap range spans different blocks");
      auto last = tree_.index_in_parent(wrap->last);
      if (last < i) throw PrintError("wrap range is reversed");
      write_gap(cursor, cn.start, prev, c, parent);
      auto base = indent_of(c);
      render(wrap->payload, base, false, false);
      auto saved = extra_;
      extra_ += unit_;
      std::uint32_t inner = cn.end;
      NodeId inner_prev = kNoNode;
      std::size_t j = i + 1;
      while (j <= last) j = emit_item(parent, j, inner, inner_prev);
      // keep a same-line trailing comment of the last statement inside the try
      if (last + 1 < kids.size()) {
        auto g = tree_.text(inner, tree_.node(kids[last + 1]).start);
        auto p = first_nl(g);
        if (p != g.npos) {
          auto head = g.substr(0, p);
          auto k = head.find_first_not_of(" \t\f");
          if (k != head.npos && (head.substr(k, 2) == "//" || (head.substr(k, 2) == "/*" && head.find("*/") != head.npos))) {
            write_orig(head);
            inner += static_cast<std::uint32_t>(p);
          }
        }
      }
      extra_ = saved;
      write_raw(nl_);
      write_raw(base + "}");
      cursor = inner;
      prev = kNoNode;
      return last + 1;
    }

    bool block_start = !ed_.insertions(Placement::BlockStart, parent).empty();
    bool closing = i + 1 == kids.size() && tree_.is_token(c) && i > 0;
    if (block_start && closing && !has_statements(parent)) {
      emit_block_start(parent, cursor, cn.start);
    } else {
      write_gap(cursor, cn.start, prev, c, parent);
    }
    emit(c);
    for (const auto* ins : ed_.insertions(Placement::InlineAfter, c)) render(ins->payload, "", false, true);
    cursor = cn.end;
    prev = c;
    return i + 1;
  }

  // Insertions after `prev` and before `next` go at the gap's first line break.
  void write_gap(std::uint32_t lo, std::uint32_t hi, NodeId prev, NodeId next, NodeId parent) {
    auto g = tree_.text(lo, hi);
    std::size_t pos = 0;

    if (parent == tree_.root && site_ && !imports_done_) {
      if (site_->mode == ImportSite::Mode::FileStart && site_->offset >= lo && site_->offset <= hi && next != kNoNode) {
        write_orig(g.substr(0, site_->offset - lo));
        write_raw(import_lines());
        write_raw(nl_);
        write_raw(nl_);
        pos = site_->offset - lo;
        imports_done_ = true;
      } else if (site_->mode != ImportSite::Mode::FileStart && prev != kNoNode && tree_.node(prev).end == site_->offset) {
        write_raw(nl_);
        if (site_->mode == ImportSite::Mode::AfterPackage) write_raw(nl_);
        write_raw(import_lines());
        imports_done_ = true;
      }
    }
    if (parent == tree_.root && next != kNoNode) {
      if (auto it = before_import_.find(next); it != before_import_.end()) {
        write_orig(g.substr(pos));
        for (const auto& name : it->second) {
          write_raw("import " + name + ";");
          write_raw(nl_);
        }
        return;
      }
    }

    if (prev != kNoNode) {
      auto after = ed_.insertions(Placement::LineAfter, prev);
      if (!after.empty()) {
        auto rest = g.substr(pos);
        auto p = first_nl(rest);
        auto base = indent_of(prev);
        if (p != rest.npos) {
          write_orig(rest.substr(0, p));
          for (const auto* ins : after) {
            write_raw(nl_);
            render(ins->payload, base, true, false);
          }
          pos += p;
        } else {
          for (const auto* ins : after) {
            write_raw(" ");
            render(ins->payload, base, false, true);
          }
        }
      }
    }

    if (next != kNoNode) {
      std::vector<const TreeEdit*> before;
      if (!ed_.insertions(Placement::BlockStart, parent).empty() && first_statement(parent) == next)
        before = ed_.insertions(Placement::BlockStart, parent);
      auto b = ed_.insertions(Placement::LineBefore, next);
      before.insert(before.end(), b.begin(), b.end());
      if (!before.empty()) {
        auto rest = g.substr(pos);
        auto p = first_nl(rest);
        auto base = indent_of(next);
        if (p != rest.npos) {
          auto end = past_nl(rest, p);
          write_orig(rest.substr(0, end));
          for (const auto* ins : before) {
            render(ins->payload, base, true, false);
            write_raw(nl_);
          }
          pos += end;
        } else {
          write_orig(rest);
          for (const auto* ins : before) {
            render(ins->payload, base, false, true);
            write_raw(" ");
          }
          pos = g.size();
        }
      }
    }
    write_orig(g.substr(pos));
  }

  // Body of an empty block: the gap between its braces receives the new lines.
  void emit_block_start(NodeId block, std::uint32_t lo, std::uint32_t hi) {
    auto g = tree_.text(lo, hi);
    auto base = indent_of(block);
    auto inner = base + unit_;
    auto lastnl = g.find_last_of("\r\n");
    auto payloads = ed_.insertions(Placement::BlockStart, block);
    auto lines = [&] {
      for (const auto* ins : payloads) {
        render(ins->payload, inner, true, false);
        write_raw(nl_);
      }
    };
    if (has_comment(g)) {
      if (lastnl != g.npos && all_blank(g.substr(lastnl + 1))) {
        write_orig(g.substr(0, lastnl + 1));
        lines();
        write_orig(g.substr(lastnl + 1));
      } else {
        auto k = g.find_last_not_of(" \t\f");
        write_orig(g.substr(0, k + 1));
        write_raw(nl_);
        lines();
        write_raw(base);
      }
      return;
    }
    write_raw(nl_);
    lines();
    if (lastnl != g.npos) {
      write_orig(g.substr(lastnl + 1));
    } else {
      write_raw(base);
    }
  }

  std::string import_lines() const {
    std::string s;
    for (std::size_t i = 0; i < block_imports_.size(); ++i) {
      if (i) s += nl_;
      s += "import " + block_imports_[i] + ";";
    }
    return s;
  }

  const EditedTree& ed_;
  bool descend_;
  const SyntaxTree& tree_;
  std::string_view text_;
  std::string nl_;
  std::string unit_;
  std::optional<ImportSite> site_;
  bool imports_done_ = false;
  std::vector<std::string> block_imports_;
  std::map<NodeId, std::vector<std::string>> before_import_;
  std::string out_;
  std::string extra_;
  bool pending_ = false;
};

}  // namespace

std::string infer_indent_unit(std::string_view text) {
  std::size_t tabs = 0, spaces = 0;
  std::map<int, std::size_t> deltas;
  int prev_width = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    auto e = text.find_first_of("\r\n", i);
    if (e == text.npos) e = text.size();
    auto line = text.substr(i, e - i);
    i = e < text.size() ? past_nl(text, e) : e;
    auto k = line.find_first_not_of(" \t");
    if (k == line.npos) continue;  // blank line
    if (k > 0 && line[0] == '\t') {
      ++tabs;
      continue;
    }
    // continuation lines of block comments are not evidence
    if (line[k] == '*') continue;
    if (k > 0) ++spaces;
    int width = static_cast<int>(k);
    int d = width - prev_width;
    if (d == 2 || d == 3 || d == 4 || d == 8) ++deltas[d];
    prev_width = width;
  }
  if (tabs > spaces) return "\t";
  int best = 4;
  std::size_t best_count = 0;
  for (auto [d, count] : deltas) {
    if (count > best_count || (count == best_count && d == 4)) {
      best = d;
      best_count = count;
    }
  }
  return std::string(static_cast<std::size_t>(best), ' ');
}

std::string print(const EditedTree& edited, PrintMode mode) {
  if (edited.empty() && mode == PrintMode::Reuse) return edited.tree().file_text();
  return Printer(edited, mode).run();
}

}  // namespace jrepair
