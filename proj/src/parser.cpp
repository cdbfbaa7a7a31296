#include "jrepair/parser.hpp"

#include <algorithm>
#include <array>

namespace jrepair {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Construct outside the supported grammar; always becomes a verbatim node.
struct Unsupported {
  std::string what;
};

bool is_primitive(std::string_view w) {
  static constexpr std::array<std::string_view, 8> kPrims = {"boolean", "byte", "short", "char",
                                                             "int",     "long", "float", "double"};
  return std::find(kPrims.begin(), kPrims.end(), w) != kPrims.end();
}

bool is_modifier_word(std::string_view w) {
  static constexpr std::array<std::string_view, 12> kMods = {
      "public", "protected", "private", "static",   "abstract", "final",
      "native", "synchronized", "transient", "volatile", "strictfp", "default"};
  return std::find(kMods.begin(), kMods.end(), w) != kMods.end();
}

class Parser {
 public:
  Parser(std::shared_ptr<const SourceFile> file, ParseOptions options)
      : file_(std::move(file)), options_(options) {
    for (const auto& t : tokenize(*file_))
      if (!t.documentary()) toks_.push_back(t);
  }

  SyntaxTree run() {
    open(NodeKind::CompilationUnit);
    compilation_unit();
    Frame root = std::move(frames_.back());
    frames_.pop_back();
    SyntaxNode n;
    n.kind = NodeKind::CompilationUnit;
    n.start = 0;
    n.end = static_cast<std::uint32_t>(file_->text.size());
    n.children = std::move(root.children);
    auto id = static_cast<NodeId>(arena_.size());
    for (auto c : n.children) arena_[c].parent = id;
    arena_.push_back(std::move(n));

    SyntaxTree tree;
    tree.source = file_;
    tree.tokens = std::move(toks_);
    tree.nodes = std::move(arena_);
    tree.root = id;
    return tree;
  }

 private:
  struct Frame {
    NodeKind kind;
    std::vector<NodeId> children;
  };
  struct Snapshot {
    std::size_t pos, arena, frames, children;
  };

  // ---- token access ----
  bool eof(std::size_t p) const { return p >= toks_.size(); }
  bool eof() const { return eof(pos_); }
  std::string_view lex(std::size_t p) const {
    if (eof(p)) return {};
    return std::string_view(file_->text).substr(toks_[p].start, toks_[p].end - toks_[p].start);
  }
  TokenKind tkind(std::size_t p) const { return toks_[p].kind; }
  bool at(std::string_view s) const { return at(pos_, s); }
  bool at(std::size_t p, std::string_view s) const {
    return !eof(p) && tkind(p) != TokenKind::StringLiteral && tkind(p) != TokenKind::CharLiteral && lex(p) == s;
  }
  bool at_ident(std::size_t p) const { return !eof(p) && tkind(p) == TokenKind::Identifier; }
  bool at_ident() const { return at_ident(pos_); }
  bool adjacent(std::size_t p) const { return !eof(p + 1) && toks_[p].end == toks_[p + 1].start; }

  // ---- tree building ----
  void open(NodeKind kind) { frames_.push_back({kind, {}}); }
  void retag(NodeKind kind) { frames_.back().kind = kind; }
  std::size_t mark() const { return frames_.back().children.size(); }

  // Starts a node that adopts the children collected since `m`.
  void open_at(std::size_t m, NodeKind kind) {
    auto& top = frames_.back().children;
    std::vector<NodeId> adopted(top.begin() + static_cast<std::ptrdiff_t>(m), top.end());
    top.resize(m);
    frames_.push_back({kind, std::move(adopted)});
  }

  NodeId close() {
    Frame f = std::move(frames_.back());
    frames_.pop_back();
    if (f.children.empty()) return kNoNode;
    SyntaxNode n;
    n.kind = f.kind;
    n.start = arena_[f.children.front()].start;
    n.end = arena_[f.children.back()].end;
    n.children = std::move(f.children);
    auto id = static_cast<NodeId>(arena_.size());
    for (auto c : n.children) arena_[c].parent = id;
    arena_.push_back(std::move(n));
    frames_.back().children.push_back(id);
    return id;
  }

  void bump() {
    if (eof()) error("more input");
    SyntaxNode n;
    n.kind = NodeKind::Token;
    n.token = static_cast<std::uint32_t>(pos_);
    n.start = toks_[pos_].start;
    n.end = toks_[pos_].end;
    auto id = static_cast<NodeId>(arena_.size());
    arena_.push_back(std::move(n));
    frames_.back().children.push_back(id);
    ++pos_;
  }
  void bump(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) bump();
  }

  void expect(std::string_view s) {
    if (!at(s)) error("'" + std::string(s) + "'");
    bump();
  }
  void expect_ident() {
    if (!at_ident()) error("identifier");
    bump();
  }

  Snapshot snapshot() const { return {pos_, arena_.size(), frames_.size(), frames_.back().children.size()}; }
  void restore(const Snapshot& s) {
    pos_ = s.pos;
    arena_.resize(s.arena);
    frames_.resize(s.frames);
    frames_.back().children.resize(s.children);
  }

  [[noreturn]] void error(const std::string& expected) const {
    std::uint32_t start = eof() ? static_cast<std::uint32_t>(file_->text.size()) : toks_[pos_].start;
    std::uint32_t end = eof() ? start : toks_[pos_].end;
    Span s = file_->lines.span(start, end);
    std::string found = eof() ? "end of file" : "'" + std::string(lex(pos_)) + "'";
    throw ParseError(file_->path.string() + ":" + std::to_string(s.start_line) + ":" +
                         std::to_string(s.start_col) + ": expected " + expected + ", found " + found,
                     s, expected);
  }

  // ---- lookahead helpers (no tree building) ----
  std::size_t skip_balanced(std::size_t p, std::string_view open_s, std::string_view close_s) const {
    int depth = 0;
    for (; !eof(p); ++p) {
      if (at(p, open_s)) ++depth;
      if (at(p, close_s) && --depth == 0) return p + 1;
    }
    return npos;
  }

  std::size_t skip_annotation(std::size_t p) const {
    if (!at(p, "@") || at(p + 1, "interface")) return npos;
    ++p;
    if (!at_ident(p)) return npos;
    ++p;
    while (at(p, ".") && at_ident(p + 1)) p += 2;
    if (at(p, "(")) p = skip_balanced(p, "(", ")");
    return p;
  }

  std::size_t skip_type_args(std::size_t p) const {
    int depth = 0;
    for (; !eof(p); ++p) {
      auto w = lex(p);
      if (w == "<") {
        ++depth;
      } else if (w == ">") {
        if (--depth == 0) return p + 1;
      } else if (w == "@") {
        p = skip_annotation(p);
        if (p == npos) return npos;
        --p;
      } else if (!(at_ident(p) || w == "." || w == "," || w == "?" || w == "&" || w == "[" || w == "]" ||
                   w == "extends" || w == "super" || is_primitive(w))) {
        return npos;
      }
    }
    return npos;
  }

  std::size_t skip_type(std::size_t p) const {
    while (at(p, "@")) {
      p = skip_annotation(p);
      if (p == npos) return npos;
    }
    if (eof(p)) return npos;
    if (tkind(p) == TokenKind::Keyword && (is_primitive(lex(p)) || lex(p) == "void")) {
      ++p;
    } else if (at_ident(p)) {
      ++p;
      if (at(p, "<")) p = skip_type_args(p);
      while (p != npos && at(p, ".") && at_ident(p + 1)) {
        p += 2;
        if (at(p, "<")) p = skip_type_args(p);
      }
      if (p == npos) return npos;
    } else {
      return npos;
    }
    while (at(p, "[") && at(p + 1, "]")) p += 2;
    return p;
  }

  std::size_t skip_modifiers(std::size_t p) const {
    while (!eof(p)) {
      if (at(p, "@") && !at(p + 1, "interface")) {
        p = skip_annotation(p);
        if (p == npos) return npos;
      } else if (tkind(p) == TokenKind::Keyword && is_modifier_word(lex(p)) && !at(p, "default")) {
        ++p;
      } else {
        break;
      }
    }
    return p;
  }

  bool local_var_decl_ahead() const {
    auto p = skip_modifiers(pos_);
    if (p == npos) return false;
    auto q = skip_type(p);
    if (q == npos || !at_ident(q)) return false;
    return at(q + 1, "=") || at(q + 1, ";") || at(q + 1, ",") || at(q + 1, "[") || at(q + 1, ":");
  }

  bool local_class_ahead() const {
    auto p = skip_modifiers(pos_);
    if (p == npos) return false;
    return at(p, "class") || at(p, "interface") || at(p, "enum") || (at(p, "@") && at(p + 1, "interface"));
  }

  bool lambda_ahead() const {
    if (at_ident() && at(pos_ + 1, "->")) return true;
    if (!at("(")) return false;
    auto q = skip_balanced(pos_, "(", ")");
    return q != npos && at(q, "->");
  }

  bool cast_ahead() const {
    if (!at("(")) return false;
    std::size_t p = pos_ + 1;
    bool primitive = !eof(p) && tkind(p) == TokenKind::Keyword && is_primitive(lex(p));
    auto q = skip_type(p);
    while (q != npos && at(q, "&")) q = skip_type(q + 1);
    if (q == npos || !at(q, ")")) return false;
    if (primitive) return true;
    std::size_t n = q + 1;
    if (eof(n)) return false;
    auto k = tkind(n);
    if (k == TokenKind::Identifier || (Token{k, 0, 0}.literal())) return true;
    auto w = lex(n);
    return w == "(" || w == "!" || w == "~" || w == "this" || w == "super" || w == "new" || w == "true" ||
           w == "false" || w == "null" || is_primitive(w);
  }

  // ---- compilation unit ----
  void compilation_unit() {
    if (at_ident() && (lex(pos_) == "module" || lex(pos_) == "open") && !at(pos_ + 1, "(")) {
      auto p = pos_;
      while (!eof(p) && !at(p, "{") && !at(p, ";")) ++p;
      if (at(p, "{")) {
        verbatim_rest();
        return;
      }
    }
    std::size_t p = pos_;
    while (at(p, "@")) {
      p = skip_annotation(p);
      if (p == npos) break;
    }
    if (p != npos && at(p, "package")) {
      open(NodeKind::PackageDecl);
      while (at("@")) annotation();
      bump();
      qualified_name();
      expect(";");
      close();
    }
    while (at("import") || at(";")) {
      if (at(";")) {
        bump();
        continue;
      }
      open(NodeKind::ImportDecl);
      bump();
      if (at("static")) bump();
      expect_ident();
      while (at(".")) {
        bump();
        if (at("*")) {
          bump();
          break;
        }
        expect_ident();
      }
      expect(";");
      close();
    }
    while (!eof()) {
      if (at(";")) {
        bump();
        continue;
      }
      type_declaration_recovering();
    }
  }

  void verbatim_rest() {
    open(NodeKind::Verbatim);
    while (!eof()) bump();
    close();
  }

  void qualified_name() {
    expect_ident();
    while (at(".") && at_ident(pos_ + 1)) bump(2);
  }

  void type_declaration_recovering() {
    auto snap = snapshot();
    try {
      open(NodeKind::ClassDecl);
      modifiers();
      type_declaration_rest();
      close();
    } catch (const Unsupported&) {
      restore(snap);
      verbatim_declaration(true);
    } catch (const ParseError&) {
      if (!options_.recover) throw;
      restore(snap);
      verbatim_declaration(true);
    }
  }

  // Skips one balanced declaration or statement as a verbatim node.
  void verbatim_declaration(bool top_level) {
    open(NodeKind::Verbatim);
    int depth = 0;
    bool consumed = false;
    while (!eof()) {
      auto w = lex(pos_);
      bool closer = (w == "}" || w == ")" || w == "]") && tkind(pos_) == TokenKind::Punct;
      if (closer && depth == 0) {
        if (consumed || !top_level) break;
        bump();  // stray closer at top level
        break;
      }
      bool opener = (w == "{" || w == "(" || w == "[") && tkind(pos_) == TokenKind::Punct;
      bump();
      consumed = true;
      if (opener) ++depth;
      if (closer) {
        --depth;
        if (depth == 0 && w == "}") {
          if (at(";")) bump();
          if (at("else") || at("catch") || at("finally") || at("while")) continue;
          break;
        }
      }
      if (depth == 0 && w == ";") break;
    }
    if (!consumed && !eof() && top_level) bump();
    close();
  }

  void modifiers() {
    if (!(at("@") || (!eof() && tkind(pos_) == TokenKind::Keyword && is_modifier_word(lex(pos_))) ||
          (at_ident() && (lex(pos_) == "sealed" || (lex(pos_) == "non" && at(pos_ + 1, "-"))))))
      return;
    open(NodeKind::Modifiers);
    while (true) {
      if (at("@") && !at(pos_ + 1, "interface")) {
        annotation();
      } else if (!eof() && tkind(pos_) == TokenKind::Keyword && is_modifier_word(lex(pos_))) {
        bump();
      } else if (at_ident() && (lex(pos_) == "sealed" || (lex(pos_) == "non" && at(pos_ + 1, "-")))) {
        throw Unsupported{"sealed types"};
      } else {
        break;
      }
    }
    close();
  }

  void annotation() {
    open(NodeKind::Annotation);
    expect("@");
    qualified_name();
    if (at("(")) {
      int depth = 0;
      do {
        if (at("(")) ++depth;
        if (at(")")) --depth;
        bump();
      } while (depth > 0 && !eof());
      if (depth > 0) error("')'");
    }
    close();
  }

  // Frame already open with modifiers parsed.
  void type_declaration_rest() {
    if (at("class")) {
      retag(frames_.size() > 1 ? NodeKind::ClassDecl : NodeKind::ClassDecl);
      bump();
      expect_ident();
      if (at("<")) type_params();
      if (at("extends")) {
        open(NodeKind::ExtendsClause);
        bump();
        type();
        close();
      }
      if (at("implements")) {
        open(NodeKind::ImplementsClause);
        bump();
        type_list();
        close();
      }
      if (at_ident() && lex(pos_) == "permits") throw Unsupported{"sealed types"};
      class_body();
    } else if (at("interface")) {
      retag(NodeKind::InterfaceDecl);
      bump();
      expect_ident();
      if (at("<")) type_params();
      if (at("extends")) {
        open(NodeKind::ExtendsClause);
        bump();
        type_list();
        close();
      }
      if (at_ident() && lex(pos_) == "permits") throw Unsupported{"sealed types"};
      class_body();
    } else if (at("enum")) {
      retag(NodeKind::EnumDecl);
      bump();
      expect_ident();
      if (at("implements")) {
        open(NodeKind::ImplementsClause);
        bump();
        type_list();
        close();
      }
      enum_body();
    } else if (at("@") && at(pos_ + 1, "interface")) {
      throw Unsupported{"annotation type declaration"};
    } else if (at_ident() && lex(pos_) == "record" && at_ident(pos_ + 1)) {
      throw Unsupported{"record declaration"};
    } else {
      error("class, interface or enum declaration");
    }
  }

  void type_list() {
    type();
    while (at(",")) {
      bump();
      type();
    }
  }

  void type_params() {
    open(NodeKind::TypeParams);
    expect("<");
    while (true) {
      while (at("@")) annotation();
      expect_ident();
      if (at("extends")) {
        bump();
        type();
        while (at("&")) {
          bump();
          type();
        }
      }
      if (!at(",")) break;
      bump();
    }
    expect(">");
    close();
  }

  void class_body() {
    open(NodeKind::ClassBody);
    expect("{");
    while (!eof() && !at("}")) member_recovering();
    expect("}");
    close();
  }

  void enum_body() {
    open(NodeKind::ClassBody);
    expect("{");
    while (at_ident() || at("@")) {
      open(NodeKind::EnumConstant);
      while (at("@")) annotation();
      expect_ident();
      if (at("(")) arguments();
      if (at("{")) class_body();
      close();
      if (!at(",")) break;
      bump();
    }
    if (at(";")) {
      bump();
      while (!eof() && !at("}")) member_recovering();
    }
    expect("}");
    close();
  }

  void member_recovering() {
    auto snap = snapshot();
    try {
      member();
    } catch (const Unsupported&) {
      restore(snap);
      verbatim_declaration(false);
    } catch (const ParseError&) {
      if (!options_.recover) throw;
      restore(snap);
      verbatim_declaration(false);
    }
  }

  void member() {
    if (at(";")) {
      bump();
      return;
    }
    if (at("{") || (at("static") && at(pos_ + 1, "{"))) {
      open(NodeKind::Initializer);
      if (at("static")) bump();
      block();
      close();
      return;
    }
    open(NodeKind::FieldDecl);
    modifiers();
    if (at("class") || at("interface") || at("enum") || (at("@") && at(pos_ + 1, "interface")) ||
        (at_ident() && lex(pos_) == "record" && at_ident(pos_ + 1))) {
      type_declaration_rest();
      close();
      return;
    }
    if (at("<")) type_params();
    if (at_ident() && at(pos_ + 1, "(")) {
      retag(NodeKind::ConstructorDecl);
      bump();
      params();
      if (at("throws")) throws_clause();
      block();
      close();
      return;
    }
    type();
    if (at_ident() && at(pos_ + 1, "(")) {
      retag(NodeKind::MethodDecl);
      bump();
      params();
      while (at("[") && at(pos_ + 1, "]")) bump(2);
      if (at("throws")) throws_clause();
      if (at("default")) {
        bump();
        element_value();
        expect(";");
      } else if (at(";")) {
        bump();
      } else {
        block();
      }
      close();
      return;
    }
    declarators();
    expect(";");
    close();
  }

  void element_value() {
    if (at("@")) {
      annotation();
    } else if (at("{")) {
      array_init();
    } else {
      expression();
    }
  }

  void throws_clause() {
    open(NodeKind::ThrowsClause);
    bump();
    type_list();
    close();
  }

  void params() {
    open(NodeKind::ParamList);
    expect("(");
    if (!at(")")) {
      param();
      while (at(",")) {
        bump();
        param();
      }
    }
    expect(")");
    close();
  }

  void param() {
    open(NodeKind::Parameter);
    modifiers();
    type();
    if (at("...")) bump();
    if (at("this")) {
      bump();
    } else {
      expect_ident();
    }
    while (at("[") && at(pos_ + 1, "]")) bump(2);
    close();
  }

  void declarators() {
    declarator();
    while (at(",")) {
      bump();
      declarator();
    }
  }

  void declarator() {
    open(NodeKind::VarDeclarator);
    expect_ident();
    while (at("[") && at(pos_ + 1, "]")) bump(2);
    if (at("=")) {
      bump();
      var_init();
    }
    close();
  }

  void var_init() {
    if (at("{")) {
      array_init();
    } else {
      expression();
    }
  }

  void array_init() {
    open(NodeKind::ArrayInit);
    expect("{");
    while (!eof() && !at("}")) {
      var_init();
      if (!at(",")) break;
      bump();
    }
    expect("}");
    close();
  }

  // ---- types ----
  void type() {
    open(NodeKind::Type);
    while (at("@")) annotation();
    if (!eof() && tkind(pos_) == TokenKind::Keyword && (is_primitive(lex(pos_)) || lex(pos_) == "void")) {
      bump();
    } else {
      expect_ident();
      if (at("<")) type_args();
      while (at(".") && (at_ident(pos_ + 1) || at(pos_ + 1, "@"))) {
        bump();
        while (at("@")) annotation();
        expect_ident();
        if (at("<")) type_args();
      }
    }
    while (at("@") || (at("[") && at(pos_ + 1, "]"))) {
      if (at("@")) {
        annotation();
      } else {
        bump(2);
      }
    }
    close();
  }

  void type_args() {
    open(NodeKind::TypeArgs);
    expect("<");
    if (!at(">")) {
      type_arg();
      while (at(",")) {
        bump();
        type_arg();
      }
    }
    expect(">");
    close();
  }

  void type_arg() {
    if (at("?") || (at("@") && skip_annotation(pos_) != npos && at(skip_annotation(pos_), "?"))) {
      open(NodeKind::Type);
      while (at("@")) annotation();
      bump();
      if (at("extends") || at("super")) {
        bump();
        type();
      }
      close();
    } else {
      type();
    }
  }

  // ---- statements ----
  void block() {
    open(NodeKind::Block);
    expect("{");
    while (!eof() && !at("}")) block_statement_recovering();
    expect("}");
    close();
  }

  void block_statement_recovering() {
    auto snap = snapshot();
    try {
      block_statement();
    } catch (const Unsupported&) {
      restore(snap);
      verbatim_declaration(false);
    } catch (const ParseError&) {
      if (!options_.recover) throw;
      restore(snap);
      verbatim_declaration(false);
    }
  }

  void block_statement() {
    if (local_class_ahead()) {
      open(NodeKind::ClassDecl);
      modifiers();
      type_declaration_rest();
      close();
      return;
    }
    if (at_ident() && lex(pos_) == "record" && at_ident(pos_ + 1) && at(pos_ + 2, "("))
      throw Unsupported{"local record"};
    if (local_var_decl_ahead()) {
      open(NodeKind::LocalVarDecl);
      modifiers();
      type();
      declarators();
      expect(";");
      close();
      return;
    }
    statement();
  }

  void par_expression() {
    expect("(");
    expression();
    expect(")");
  }

  void statement() {
    if (at("{")) {
      block();
      return;
    }
    if (at(";")) {
      open(NodeKind::EmptyStmt);
      bump();
      close();
      return;
    }
    if (at("if")) {
      open(NodeKind::IfStmt);
      bump();
      par_expression();
      statement();
      if (at("else")) {
        bump();
        statement();
      }
      close();
    } else if (at("while")) {
      open(NodeKind::WhileStmt);
      bump();
      par_expression();
      statement();
      close();
    } else if (at("do")) {
      open(NodeKind::DoStmt);
      bump();
      statement();
      expect("while");
      par_expression();
      expect(";");
      close();
    } else if (at("for")) {
      for_statement();
    } else if (at("try")) {
      try_statement();
    } else if (at("switch")) {
      switch_statement();
    } else if (at("return")) {
      open(NodeKind::ReturnStmt);
      bump();
      if (!at(";")) expression();
      expect(";");
      close();
    } else if (at("throw")) {
      open(NodeKind::ThrowStmt);
      bump();
      expression();
      expect(";");
      close();
    } else if (at("break") || at("continue")) {
      open(at("break") ? NodeKind::BreakStmt : NodeKind::ContinueStmt);
      bump();
      if (at_ident()) bump();
      expect(";");
      close();
    } else if (at("synchronized")) {
      open(NodeKind::SyncStmt);
      bump();
      par_expression();
      block();
      close();
    } else if (at("assert")) {
      open(NodeKind::AssertStmt);
      bump();
      expression();
      if (at(":")) {
        bump();
        expression();
      }
      expect(";");
      close();
    } else if (at_ident() && at(pos_ + 1, ":")) {
      open(NodeKind::LabeledStmt);
      bump(2);
      statement();
      close();
    } else if (at_ident() && lex(pos_) == "yield" && !at(pos_ + 1, "=") && !at(pos_ + 1, "(") &&
               !at(pos_ + 1, ".")) {
      throw Unsupported{"yield statement"};
    } else {
      open(NodeKind::ExprStmt);
      expression();
      expect(";");
      close();
    }
  }

  void for_statement() {
    open(NodeKind::ForStmt);
    bump();
    expect("(");
    auto p = skip_modifiers(pos_);
    auto q = p == npos ? npos : skip_type(p);
    if (q != npos && at_ident(q) && at(q + 1, ":")) {
      retag(NodeKind::ForEachStmt);
      modifiers();
      type();
      expect_ident();
      expect(":");
      expression();
      expect(")");
      statement();
      close();
      return;
    }
    if (!at(";")) {
      if (local_var_decl_ahead()) {
        open(NodeKind::LocalVarDecl);
        modifiers();
        type();
        declarators();
        close();
      } else {
        expression_list();
      }
    }
    expect(";");
    if (!at(";")) expression();
    expect(";");
    if (!at(")")) expression_list();
    expect(")");
    statement();
    close();
  }

  void expression_list() {
    expression();
    while (at(",")) {
      bump();
      expression();
    }
  }

  void try_statement() {
    open(NodeKind::TryStmt);
    bump();
    if (at("(")) {
      open(NodeKind::ResourceSpec);
      bump();
      while (!at(")")) {
        resource();
        if (at(";")) {
          bump();
        } else {
          break;
        }
      }
      expect(")");
      close();
    }
    block();
    while (at("catch")) {
      open(NodeKind::CatchClause);
      bump();
      expect("(");
      open(NodeKind::CatchParam);
      modifiers();
      type();
      while (at("|")) {
        bump();
        type();
      }
      expect_ident();
      close();
      expect(")");
      block();
      close();
    }
    if (at("finally")) {
      open(NodeKind::FinallyClause);
      bump();
      block();
      close();
    }
    close();
  }

  void resource() {
    open(NodeKind::Resource);
    auto p = skip_modifiers(pos_);
    auto q = p == npos ? npos : skip_type(p);
    if (q != npos && at_ident(q) && at(q + 1, "=")) {
      modifiers();
      type();
      expect_ident();
      expect("=");
      expression();
    } else {
      expression();
    }
    close();
  }

  void switch_statement() {
    open(NodeKind::SwitchStmt);
    bump();
    par_expression();
    expect("{");
    while (!eof() && !at("}")) {
      open(NodeKind::SwitchGroup);
      if (!at("case") && !at("default")) error("'case' or 'default'");
      while (at("case") || at("default")) {
        open(NodeKind::SwitchLabel);
        if (at("case")) {
          bump();
          ternary();
          while (at(",")) {
            bump();
            ternary();
          }
        } else {
          bump();
        }
        if (at("->")) throw Unsupported{"arrow switch"};
        expect(":");
        close();
      }
      while (!eof() && !at("case") && !at("default") && !at("}")) block_statement_recovering();
      close();
    }
    expect("}");
    close();
  }

  // ---- expressions ----
  // Returns the number of tokens forming an assignment operator at pos_, or 0.
  std::size_t assignment_op() const {
    if (eof()) return 0;
    auto w = lex(pos_);
    if (w == "=" || w == "+=" || w == "-=" || w == "*=" || w == "/=" || w == "%=" || w == "&=" || w == "|=" ||
        w == "^=" || w == "<<=")
      return 1;
    if (w == ">" && adjacent(pos_) && at(pos_ + 1, ">")) {
      if (adjacent(pos_ + 1) && at(pos_ + 2, "=")) return 3;
      if (adjacent(pos_ + 1) && at(pos_ + 2, ">") && adjacent(pos_ + 2) && at(pos_ + 3, "=")) return 4;
    }
    return 0;
  }

  struct BinOp {
    std::size_t tokens = 0;
    int prec = -1;
    bool instance_of = false;
  };

  BinOp binary_op() const {
    if (eof()) return {};
    auto w = lex(pos_);
    if (tkind(pos_) == TokenKind::Keyword) {
      if (w == "instanceof") return {1, 9, true};
      return {};
    }
    if (tkind(pos_) != TokenKind::Punct) return {};
    if (w == ">") {
      if (adjacent(pos_) && at(pos_ + 1, ">")) {
        if (adjacent(pos_ + 1) && at(pos_ + 2, ">")) {
          if (adjacent(pos_ + 2) && at(pos_ + 3, "=")) return {};
          return {3, 10};
        }
        if (adjacent(pos_ + 1) && at(pos_ + 2, "=")) return {};
        return {2, 10};
      }
      if (adjacent(pos_) && at(pos_ + 1, "=")) return {2, 9};
      return {1, 9};
    }
    static const std::array<std::pair<std::string_view, int>, 17> kOps = {{{"||", 3},
                                                                          {"&&", 4},
                                                                          {"|", 5},
                                                                          {"^", 6},
                                                                          {"&", 7},
                                                                          {"==", 8},
                                                                          {"!=", 8},
                                                                          {"<", 9},
                                                                          {"<=", 9},
                                                                          {"<<", 10},
                                                                          {"+", 11},
                                                                          {"-", 11},
                                                                          {"*", 12},
                                                                          {"/", 12},
                                                                          {"%", 12},
                                                                          {"", -1},
                                                                          {"", -1}}};
    for (const auto& [op, prec] : kOps) {
      if (prec >= 0 && w == op) return {1, prec};
    }
    return {};
  }

  void expression() {
    if (lambda_ahead()) {
      lambda();
      return;
    }
    auto m = mark();
    ternary();
    if (auto n = assignment_op()) {
      open_at(m, NodeKind::Assignment);
      bump(n);
      expression();
      close();
    }
  }

  void ternary() {
    auto m = mark();
    binary(0);
    if (at("?")) {
      open_at(m, NodeKind::Conditional);
      bump();
      if (lambda_ahead()) {
        lambda();
      } else {
        ternary();
      }
      expect(":");
      if (lambda_ahead()) {
        lambda();
      } else {
        ternary();
      }
      close();
    }
  }

  void binary(int min_prec) {
    auto m = mark();
    unary();
    while (true) {
      auto op = binary_op();
      if (op.prec < 0 || op.prec < min_prec) break;
      if (op.instance_of) {
        open_at(m, NodeKind::InstanceOf);
        bump();
        if (at("final")) bump();
        type();
        if (at_ident()) bump();  // binding pattern
        close();
        continue;
      }
      open_at(m, NodeKind::Binary);
      bump(op.tokens);
      binary(op.prec + 1);
      close();
    }
  }

  void unary() {
    if (at("++") || at("--") || at("+") || at("-") || at("!") || at("~")) {
      open(NodeKind::Unary);
      bump();
      unary();
      close();
      return;
    }
    if (cast_ahead()) {
      open(NodeKind::Cast);
      bump();
      type();
      while (at("&")) {
        bump();
        type();
      }
      expect(")");
      if (lambda_ahead()) {
        lambda();
      } else {
        unary();
      }
      close();
      return;
    }
    auto m = mark();
    primary_with_selectors();
    while (at("++") || at("--")) {
      open_at(m, NodeKind::Postfix);
      bump();
      close();
    }
  }

  void arguments() {
    open(NodeKind::Arguments);
    expect("(");
    if (!at(")")) expression_list();
    expect(")");
    close();
  }

  void primary_with_selectors() {
    auto m = mark();
    primary();
    while (true) {
      if (at(".")) {
        if (at_ident(pos_ + 1) && at(pos_ + 2, "(")) {
          open_at(m, NodeKind::MethodInvocation);
          bump(2);
          arguments();
          close();
        } else if (at(pos_ + 1, "<")) {
          open_at(m, NodeKind::MethodInvocation);
          bump();
          type_args();
          expect_ident();
          arguments();
          close();
        } else if (at_ident(pos_ + 1)) {
          open_at(m, NodeKind::FieldAccess);
          bump(2);
          close();
        } else if (at(pos_ + 1, "new")) {
          open_at(m, NodeKind::ObjectCreation);
          bump();
          creator();
          close();
        } else if (at(pos_ + 1, "class")) {
          open_at(m, NodeKind::ClassLiteral);
          bump(2);
          close();
        } else if (at(pos_ + 1, "this") || at(pos_ + 1, "super")) {
          open_at(m, NodeKind::FieldAccess);
          bump(2);
          close();
        } else {
          bump();
          error("member name after '.'");
        }
      } else if (at("[")) {
        if (at(pos_ + 1, "]")) {
          // array type in a class literal or method reference: String[].class, int[]::new
          auto p = pos_;
          while (at(p, "[") && at(p + 1, "]")) p += 2;
          if (at(p, ".") && at(p + 1, "class")) {
            open_at(m, NodeKind::ClassLiteral);
            while (at("[")) bump(2);
            bump(2);
            close();
          } else if (at(p, "::")) {
            open_at(m, NodeKind::MethodRef);
            while (at("[")) bump(2);
            bump();
            if (at("new")) {
              bump();
            } else {
              expect_ident();
            }
            close();
          } else {
            error("'.class' or '::'");
          }
        } else {
          open_at(m, NodeKind::ArrayAccess);
          bump();
          expression();
          expect("]");
          close();
        }
      } else if (at("::")) {
        open_at(m, NodeKind::MethodRef);
        bump();
        if (at("<")) type_args();
        if (at("new")) {
          bump();
        } else {
          expect_ident();
        }
        close();
      } else {
        break;
      }
    }
  }

  void primary() {
    if (eof()) error("expression");
    auto k = tkind(pos_);
    auto w = lex(pos_);
    if (Token{k, 0, 0}.literal() || w == "true" || w == "false" || w == "null") {
      if (k == TokenKind::Identifier) error("expression");
      open(NodeKind::Literal);
      bump();
      close();
      return;
    }
    if (k == TokenKind::Identifier) {
      if (at(pos_ + 1, "(")) {
        open(NodeKind::MethodInvocation);
        bump();
        arguments();
        close();
      } else if (at(pos_ + 1, "->")) {
        lambda();
      } else {
        open(NodeKind::Name);
        bump();
        close();
      }
      return;
    }
    if (w == "this" || w == "super") {
      if (at(pos_ + 1, "(")) {
        open(NodeKind::MethodInvocation);
        bump();
        arguments();
        close();
      } else {
        open(w == "this" ? NodeKind::This : NodeKind::Super);
        bump();
        close();
      }
      return;
    }
    if (w == "(" && k == TokenKind::Punct) {
      if (lambda_ahead()) {
        lambda();
        return;
      }
      open(NodeKind::Parens);
      bump();
      expression();
      expect(")");
      close();
      return;
    }
    if (w == "new") {
      open(NodeKind::ObjectCreation);
      creator();
      close();
      return;
    }
    if (k == TokenKind::Keyword && (is_primitive(w) || w == "void")) {
      auto m = mark();
      type();
      if (at(".") && at(pos_ + 1, "class")) {
        open_at(m, NodeKind::ClassLiteral);
        bump(2);
        close();
      } else if (at("::")) {
        open_at(m, NodeKind::MethodRef);
        bump();
        expect("new");
        close();
      } else {
        error("'.class'");
      }
      return;
    }
    if (w == "{" && k == TokenKind::Punct) {
      array_init();
      return;
    }
    if (w == "switch") throw Unsupported{"switch expression"};
    if (w == "@") {
      annotation();
      return;
    }
    error("expression");
  }

  // `new` already positioned at pos_; current frame is the creation node.
  void creator() {
    expect("new");
    if (at("<")) type_args();
    // creation type without dimensions
    open(NodeKind::Type);
    while (at("@")) annotation();
    if (!eof() && tkind(pos_) == TokenKind::Keyword && is_primitive(lex(pos_))) {
      bump();
    } else {
      expect_ident();
      if (at("<")) type_args();
      while (at(".") && at_ident(pos_ + 1)) {
        bump(2);
        if (at("<")) type_args();
      }
    }
    close();
    if (at("[")) {
      retag(NodeKind::ArrayCreation);
      while (at("[")) {
        if (at(pos_ + 1, "]")) {
          bump(2);
        } else {
          open(NodeKind::DimExpr);
          bump();
          expression();
          expect("]");
          close();
        }
      }
      if (at("{")) array_init();
      return;
    }
    arguments();
    if (at("{")) class_body();
  }

  void lambda() {
    open(NodeKind::Lambda);
    if (at_ident()) {
      bump();
    } else {
      auto end = skip_balanced(pos_, "(", ")");
      if (end == npos) error("')'");
      while (pos_ < end) bump();
    }
    expect("->");
    open(NodeKind::Verbatim);
    if (at("{")) {
      auto end = skip_balanced(pos_, "{", "}");
      if (end == npos) error("'}'");
      while (pos_ < end) bump();
    } else {
      int depth = 0;
      bool any = false;
      while (!eof()) {
        auto w = lex(pos_);
        bool punct = tkind(pos_) == TokenKind::Punct;
        if (punct && depth == 0 && (w == ")" || w == "]" || w == "}" || w == "," || w == ";")) break;
        if (punct && (w == "(" || w == "[" || w == "{")) ++depth;
        if (punct && (w == ")" || w == "]" || w == "}")) --depth;
        bump();
        any = true;
      }
      if (!any) error("lambda body");
    }
    close();
    close();
  }

  std::shared_ptr<const SourceFile> file_;
  ParseOptions options_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<SyntaxNode> arena_;
  std::vector<Frame> frames_;
};

}  // namespace

SyntaxTree parse(std::shared_ptr<const SourceFile> file, ParseOptions options) {
  return Parser(std::move(file), options).run();
}

SyntaxTree parse(const SourceFile& file, ParseOptions options) {
  return parse(std::make_shared<const SourceFile>(file), options);
}

}  // namespace jrepair
