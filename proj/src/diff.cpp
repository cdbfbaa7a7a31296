#include "jrepair/diff.hpp"

#include <algorithm>
#include <unordered_map>

namespace jrepair {

namespace {

// Lines split after each '\n'; the last line may lack a terminator.
std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto e = s.find('\n', i);
    if (e == s.npos) {
      out.push_back(s.substr(i));
      break;
    }
    out.push_back(s.substr(i, e + 1 - i));
    i = e + 1;
  }
  return out;
}

enum class Op : std::uint8_t { Keep, Del, Ins };

// Myers' O((N+M)D) shortest edit script.
std::vector<Op> edit_script(const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  const int max = n + m;
  const int off = max + 1;
  std::vector<int> v(2 * max + 3, 0);
  std::vector<std::vector<int>> trace;
  int found = -1;
  for (int d = 0; d <= max && found < 0; ++d) {
    trace.emplace_back(v.begin() + off - d, v.begin() + off + d + 1);
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && v[off + k - 1] < v[off + k + 1])) ? v[off + k + 1] : v[off + k - 1] + 1;
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) ++x, ++y;
      v[off + k] = x;
      if (x >= n && y >= m) {
        found = d;
        break;
      }
    }
  }
  std::vector<Op> ops;
  int x = n, y = m;
  for (int d = found; d > 0; --d) {
    // trace[d] holds v for k in [-d, d] as it was before step d
    const auto& pv = trace[d];
    auto at = [&](int kk) { return pv[kk + d]; };
    int k = x - y;
    int pk = (k == -d || (k != d && at(k - 1) < at(k + 1))) ? k + 1 : k - 1;
    int px = at(pk);
    int py = px - pk;
    while (x > px && y > py) {
      ops.push_back(Op::Keep);
      --x, --y;
    }
    if (x == px) {
      ops.push_back(Op::Ins);
      --y;
    } else {
      ops.push_back(Op::Del);
      --x;
    }
  }
  while (x > 0 && y > 0) {
    ops.push_back(Op::Keep);
    --x, --y;
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

// Slides each run of changed lines as far down as equal lines allow, then back
// onto a run in the other file if one was passed; the same normalization GNU
// diff applies, so ambiguous insertions land where diff(1) puts them.
void shift_boundaries(std::vector<char>& ca, std::vector<char>& cb, const std::vector<int>& ea,
                      const std::vector<int>& eb) {
  // vectors are padded with a zero flag at each end; index 1 is line 0
  for (int f = 0; f < 2; ++f) {
    auto& changed = f == 0 ? ca : cb;
    auto& other = f == 0 ? cb : ca;
    const auto& eq = f == 0 ? ea : eb;
    auto C = [&](long i) -> char& { return changed[i + 1]; };
    auto O = [&](long j) -> char& { return other[j + 1]; };
    const long end = static_cast<long>(eq.size());
    long i = 0, j = 0;
    while (true) {
      while (i < end && !C(i)) {
        while (O(j++)) {
        }
        ++i;
      }
      if (i == end) break;
      long start = i;
      while (C(++i)) {
      }
      while (O(j)) ++j;
      long runlength, corresponding;
      do {
        runlength = i - start;
        while (start && eq[start - 1] == eq[i - 1]) {
          C(--start) = 1;
          C(--i) = 0;
          while (C(start - 1)) --start;
          while (O(--j)) {
          }
        }
        corresponding = O(j - 1) ? i : end;
        while (i != end && eq[start] == eq[i]) {
          C(start++) = 0;
          C(i++) = 1;
          while (C(i)) ++i;
          while (O(++j)) corresponding = i;
        }
      } while (runlength != i - start);
      while (corresponding < i) {
        C(--start) = 1;
        C(--i) = 0;
        while (O(--j)) {
        }
      }
    }
  }
}

std::string range(std::size_t start, std::size_t count) {
  if (count == 0) return std::to_string(start) + ",0";
  if (count == 1) return std::to_string(start + 1);
  return std::to_string(start + 1) + "," + std::to_string(count);
}

}  // namespace

std::vector<Hunk> diff_lines(std::string_view a, std::string_view b, std::size_t context) {
  auto la = split_lines(a);
  auto lb = split_lines(b);
  std::unordered_map<std::string_view, int> ids;
  auto intern = [&](const std::vector<std::string_view>& ls) {
    std::vector<int> out;
    out.reserve(ls.size());
    for (auto l : ls) out.push_back(ids.emplace(l, static_cast<int>(ids.size())).first->second);
    return out;
  };
  auto ia = intern(la);
  auto ib = intern(lb);
  // trim the common prefix and suffix before running Myers
  std::size_t pre = 0;
  while (pre < ia.size() && pre < ib.size() && ia[pre] == ib[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < ia.size() - pre && suf < ib.size() - pre && ia[ia.size() - 1 - suf] == ib[ib.size() - 1 - suf]) ++suf;
  std::vector<Op> ops(pre, Op::Keep);
  auto mid = edit_script(std::vector<int>(ia.begin() + pre, ia.end() - suf), std::vector<int>(ib.begin() + pre, ib.end() - suf));
  ops.insert(ops.end(), mid.begin(), mid.end());
  ops.insert(ops.end(), suf, Op::Keep);

  std::vector<char> ca(ia.size() + 2, 0), cb(ib.size() + 2, 0);
  {
    std::size_t x = 0, y = 0;
    for (auto op : ops) {
      if (op == Op::Del) ca[1 + x] = 1;
      if (op == Op::Ins) cb[1 + y] = 1;
      if (op != Op::Ins) ++x;
      if (op != Op::Del) ++y;
    }
  }
  shift_boundaries(ca, cb, ia, ib);
  ops.clear();
  for (std::size_t x = 0, y = 0; x < ia.size() || y < ib.size();) {
    if (x < ia.size() && ca[1 + x]) {
      ops.push_back(Op::Del), ++x;
    } else if (y < ib.size() && cb[1 + y]) {
      ops.push_back(Op::Ins), ++y;
    } else {
      ops.push_back(Op::Keep), ++x, ++y;
    }
  }

  struct Row {
    Op op;
    std::size_t ai, bi;
  };
  std::vector<Row> rows;
  std::size_t ai = 0, bi = 0;
  for (auto op : ops) {
    rows.push_back({op, ai, bi});
    if (op != Op::Ins) ++ai;
    if (op != Op::Del) ++bi;
  }

  std::vector<Hunk> hunks;
  std::size_t r = 0;
  while (r < rows.size()) {
    if (rows[r].op == Op::Keep) {
      ++r;
      continue;
    }
    std::size_t begin = r >= context ? r - context : 0;
    // extend over changes separated by at most 2*context kept lines
    std::size_t end = r;
    while (true) {
      while (end < rows.size() && rows[end].op != Op::Keep) ++end;
      std::size_t keep = end;
      while (keep < rows.size() && rows[keep].op == Op::Keep) ++keep;
      if (keep < rows.size() && keep - end <= 2 * context) {
        end = keep;
        continue;
      }
      end = std::min(rows.size(), end + context);
      break;
    }
    Hunk h;
    h.old_start = rows[begin].ai;
    h.new_start = rows[begin].bi;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& row = rows[i];
      switch (row.op) {
        case Op::Keep:
          h.lines.push_back(" " + std::string(la[row.ai]));
          ++h.old_count, ++h.new_count;
          break;
        case Op::Del:
          h.lines.push_back("-" + std::string(la[row.ai]));
          ++h.old_count;
          break;
        case Op::Ins:
          h.lines.push_back("+" + std::string(lb[row.bi]));
          ++h.new_count;
          break;
      }
    }
    hunks.push_back(std::move(h));
    r = end;
  }
  return hunks;
}

std::string unified_diff(std::string_view a, std::string_view b, const std::string& a_label, const std::string& b_label,
                         std::size_t context) {
  if (a == b) return {};
  std::string out = "--- " + a_label + "\n+++ " + b_label + "\n";
  for (const auto& h : diff_lines(a, b, context)) {
    out += "@@ -" + range(h.old_start, h.old_count) + " +" + range(h.new_start, h.new_count) + " @@\n";
    for (const auto& l : h.lines) {
      out += l;
      if (l.back() != '\n') out += "\n\\ No newline at end of file\n";
    }
  }
  return out;
}

std::string apply_patch(std::string_view original, std::string_view diff) {
  if (diff.empty()) return std::string(original);
  auto src = split_lines(original);
  auto lines = split_lines(diff);
  std::string out;
  std::size_t pos = 0;  // next original line to copy
  std::size_t i = 0;
  while (i < lines.size() && lines[i].substr(0, 2) != "@@") ++i;
  while (i < lines.size()) {
    auto header = lines[i++];
    if (header.substr(0, 4) != "@@ -") throw PatchError("malformed hunk header");
    std::size_t old_start = 0, old_count = 1;
    {
      auto s = std::string(header.substr(4));
      auto comma = s.find_first_of(", ");
      old_start = std::stoul(s.substr(0, comma));
      if (s[comma] == ',') old_count = std::stoul(s.substr(comma + 1));
    }
    std::size_t first = old_count == 0 ? old_start : old_start - 1;
    if (first < pos || first > src.size()) throw PatchError("hunk out of order or out of range");
    for (; pos < first; ++pos) out += src[pos];
    std::string* last_line_owner = nullptr;
    std::size_t last_len = 0;
    while (i < lines.size() && lines[i].substr(0, 2) != "@@") {
      auto l = lines[i++];
      if (l.empty()) continue;
      char tag = l[0];
      auto body = l.substr(1);
      if (tag == '\\') {
        // previous line has no terminator
        if (last_line_owner && last_len > 0 && last_line_owner->back() == '\n') last_line_owner->pop_back();
        continue;
      }
      if (tag == ' ' || tag == '-') {
        if (pos >= src.size()) throw PatchError("context beyond end of file");
        auto orig = src[pos];
        auto cmp = std::string(body);
        if (orig != cmp && !(orig.back() != '\n' && cmp == std::string(orig) + "\n")) throw PatchError("context mismatch");
        ++pos;
      }
      if (tag == ' ' || tag == '+') {
        out += body;
        last_line_owner = &out;
        last_len = body.size();
      } else {
        last_line_owner = nullptr;
      }
    }
  }
  for (; pos < src.size(); ++pos) out += src[pos];
  return out;
}

PatchArtifact make_patch(const std::filesystem::path& path, std::string original, std::string patched,
                         std::vector<FixedEntry> fixed) {
  PatchArtifact p;
  p.path = path;
  auto label = path.relative_path().generic_string();  // "a//abs" would defeat patch -p1
  p.diff = unified_diff(original, patched, "a/" + label, "b/" + label);
  p.original = std::move(original);
  p.patched = std::move(patched);
  if (!p.diff.empty()) p.summary = std::move(fixed);
  return p;
}

LineChanges changed_lines(std::string_view a, std::string_view b) {
  LineChanges c;
  for (const auto& h : diff_lines(a, b, 0)) {
    std::size_t line = h.old_start + 1;
    // added lines right after removed ones replace them and are attributed there
    char prev = ' ';
    for (const auto& l : h.lines) {
      if (l[0] == '-') {
        c.removed.push_back(line++);
      } else if (l[0] == '+') {
        if (prev == ' ') c.inserted_before.push_back(line);
      } else {
        ++line;
      }
      if (l[0] != '+') prev = l[0];
      else if (prev == ' ') prev = '+';
    }
  }
  return c;
}

}  // namespace jrepair
