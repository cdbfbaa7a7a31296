#include "jrepair/type_hints.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace jrepair {

extern const char* const kJdkSignatures;

namespace {

constexpr std::array<std::pair<std::string_view, Prim>, 8> kPrims = {{{"boolean", Prim::Boolean},
                                                                      {"byte", Prim::Byte},
                                                                      {"short", Prim::Short},
                                                                      {"char", Prim::Char},
                                                                      {"int", Prim::Int},
                                                                      {"long", Prim::Long},
                                                                      {"float", Prim::Float},
                                                                      {"double", Prim::Double}}};

constexpr std::array<std::pair<std::string_view, Prim>, 8> kBoxed = {{{"Boolean", Prim::Boolean},
                                                                      {"Byte", Prim::Byte},
                                                                      {"Short", Prim::Short},
                                                                      {"Character", Prim::Char},
                                                                      {"Integer", Prim::Int},
                                                                      {"Long", Prim::Long},
                                                                      {"Float", Prim::Float},
                                                                      {"Double", Prim::Double}}};

Prim prim_of(std::string_view word) {
  for (auto [n, p] : kPrims)
    if (n == word) return p;
  return Prim::None;
}

Prim boxed_prim(std::string_view simple) {
  for (auto [n, p] : kBoxed)
    if (n == simple) return p;
  return Prim::None;
}

std::string_view last_segment(std::string_view name) {
  auto dot = name.rfind('.');
  return dot == std::string_view::npos ? name : name.substr(dot + 1);
}

bool is_numeric(Prim p) { return p != Prim::None && p != Prim::Boolean; }

TypeHint unary_promotion(const TypeHint& h) {
  Prim p = unboxed(h);
  if (!is_numeric(p)) return TypeHint::unknown();
  if (p == Prim::Byte || p == Prim::Short || p == Prim::Char) p = Prim::Int;
  return TypeHint::primitive(p);
}

TypeHint boolean() { return TypeHint::primitive(Prim::Boolean); }

// Qualified owner name used for method table lookups.
std::string owner_name(const TypeHint& h) {
  switch (h.category()) {
    case HintCategory::String: return "java.lang.String";
    case HintCategory::Boxed: return "java.lang." + h.name;
    case HintCategory::KnownClass: return h.name;
    default: return {};
  }
}

// Dotted text of a pure name chain (a.b.c), or empty.
std::string dotted_name(const SyntaxTree& tree, NodeId id) {
  if (tree.kind(id) == NodeKind::Name) return std::string(tree.text(id));
  if (tree.kind(id) == NodeKind::FieldAccess) {
    const auto& ch = tree.node(id).children;
    if (ch.size() != 3) return {};
    auto left = dotted_name(tree, ch[0]);
    if (left.empty() || tree.token_of(ch[2]).kind != TokenKind::Identifier) return {};
    return left + "." + std::string(tree.text(ch[2]));
  }
  return {};
}

std::string first_segment(const std::string& dotted) { return dotted.substr(0, dotted.find('.')); }

}  // namespace

std::string_view prim_name(Prim p) {
  for (auto [n, q] : kPrims)
    if (q == p) return n;
  return "none";
}

TypeHint TypeHint::array_of(TypeHint element, int extra_dims) {
  if (element.is_unknown()) return element;
  element.dims += extra_dims;
  return element;
}

TypeHint TypeHint::element() const {
  if (!is_array()) return unknown();
  TypeHint e = *this;
  --e.dims;
  return e;
}

std::string TypeHint::to_string() const {
  std::string s;
  switch (base) {
    case HintCategory::Unknown: return "unknown";
    case HintCategory::Primitive: s = std::string(prim_name(prim)); break;
    case HintCategory::String: s = "java.lang.String"; break;
    case HintCategory::Boxed: s = "java.lang." + name; break;
    default: s = name; break;
  }
  for (int i = 0; i < dims; ++i) s += "[]";
  return s;
}

Prim unboxed(const TypeHint& h) {
  if (h.dims > 0) return Prim::None;
  if (h.base == HintCategory::Primitive) return h.prim;
  if (h.base == HintCategory::Boxed) return boxed_prim(h.name);
  return Prim::None;
}

TypeHint numeric_promotion(const TypeHint& a, const TypeHint& b) {
  Prim x = unboxed(a);
  Prim y = unboxed(b);
  if (!is_numeric(x) || !is_numeric(y)) return TypeHint::unknown();
  if (x == Prim::Double || y == Prim::Double) return TypeHint::primitive(Prim::Double);
  if (x == Prim::Float || y == Prim::Float) return TypeHint::primitive(Prim::Float);
  if (x == Prim::Long || y == Prim::Long) return TypeHint::primitive(Prim::Long);
  return TypeHint::primitive(Prim::Int);
}

// ---- TypeTable ----

std::shared_ptr<const TypeTable> TypeTable::builtin() {
  static const std::shared_ptr<const TypeTable> table = [] {
    auto t = std::make_shared<TypeTable>();
    t->load(kJdkSignatures);
    return t;
  }();
  return table;
}

void TypeTable::load(std::string_view data) {
  std::istringstream in{std::string(data)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string x; words >> x;) w.push_back(x);
    if (w.empty()) continue;
    if (w[0] == "class" && w.size() == 2) {
      add_known_class(w[1]);
    } else if (w[0] == "closeable" && w.size() == 2) {
      add_closeable(w[1]);
    } else if (w[0] == "method" && w.size() == 4) {
      add_method(w[1], w[2], w[3]);
    } else {
      throw std::runtime_error("type table line " + std::to_string(lineno) + ": cannot parse '" + line + "'");
    }
  }
}

void TypeTable::add_known_class(const std::string& qualified) {
  known_.insert(qualified);
  simple_to_qualified_[std::string(last_segment(qualified))] = qualified;
}

void TypeTable::add_closeable(const std::string& qualified) {
  add_known_class(qualified);
  closeable_.insert(qualified);
}

void TypeTable::add_method(const std::string& owner, const std::string& method, const std::string& returns) {
  methods_[{owner, method}] = returns;
}

std::string TypeTable::qualify(std::string_view name) const {
  if (known_.count(std::string(name))) return std::string(name);
  if (name.find('.') != std::string_view::npos) return {};
  auto it = simple_to_qualified_.find(std::string(name));
  return it == simple_to_qualified_.end() ? std::string() : it->second;
}

std::string TypeTable::method_return(std::string_view owner, std::string_view method) const {
  auto it = methods_.find({std::string(owner), std::string(method)});
  return it == methods_.end() ? std::string() : it->second;
}

TypeHint hint_from_name(std::string_view text, const TypeTable& table, const std::set<std::string>& user_classes) {
  int dims = 0;
  while (text.size() >= 2 && text.substr(text.size() - 2) == "[]") {
    text.remove_suffix(2);
    ++dims;
  }
  if (text.empty() || text == "void" || text == "var" || text == "?") return TypeHint::unknown();
  TypeHint h;
  auto simple = last_segment(text);
  if (Prim p = prim_of(text); p != Prim::None) {
    h = TypeHint::primitive(p);
  } else if (user_classes.count(std::string(simple))) {
    h = TypeHint::user(std::string(simple));
  } else if (text == "String" || text == "java.lang.String") {
    h = TypeHint::string();
  } else if (boxed_prim(simple) != Prim::None && (text == simple || text == "java.lang." + std::string(simple))) {
    h = TypeHint::boxed(std::string(simple));
  } else if (auto q = table.qualify(text); !q.empty()) {
    h = TypeHint::known(q);
  } else {
    h = TypeHint::user(std::string(simple));
  }
  return TypeHint::array_of(h, dims);
}

// ---- ScopeTable ----

namespace {

struct Resolution {
  const ScopeTable::Local* local = nullptr;
  const FieldInfo* field = nullptr;
};

}  // namespace

const ScopeTable::Local* ScopeTable::lookup_local(std::string_view name, NodeId at) const {
  auto pos = tree_->node(at).start;
  for (NodeId a = tree_->node(at).parent; a != kNoNode; a = tree_->node(a).parent) {
    if (tree_->kind(a) == NodeKind::ClassBody) {
      // fields of an inner class shadow locals of the enclosing method
      if (auto* cls = class_of_body(a); cls && field_of(*cls, name)) return nullptr;
    }
    auto it = scopes_.find(a);
    if (it == scopes_.end()) continue;
    for (auto l = it->second.rbegin(); l != it->second.rend(); ++l)
      if (l->name == name && l->visible_from <= pos) return &*l;
  }
  return nullptr;
}

const FieldInfo* ScopeTable::lookup_field(std::string_view name, NodeId at, const ClassInfo** owner) const {
  for (NodeId a = at; a != kNoNode; a = tree_->node(a).parent) {
    if (tree_->kind(a) != NodeKind::ClassBody) continue;
    auto* cls = class_of_body(a);
    if (!cls) continue;
    // the field may come from a superclass declared in the file
    for (const ClassInfo* c = cls; c;) {
      auto it = c->fields.find(std::string(name));
      if (it != c->fields.end()) {
        if (owner) *owner = c;
        return &it->second;
      }
      auto* next = class_named(c->superclass);
      c = next == c ? nullptr : next;
    }
  }
  return nullptr;
}

TypeHint ScopeTable::lookup(std::string_view name, NodeId at) const {
  if (auto* l = lookup_local(name, at)) {
    if (l->var_init != kNoNode) {
      if (var_depth_ > 16) return TypeHint::unknown();
      ++var_depth_;
      auto h = expr_type(l->var_init, *this);
      --var_depth_;
      return h;
    }
    return l->hint;
  }
  if (auto* f = lookup_field(name, at)) return f->hint;
  return TypeHint::unknown();
}

const ClassInfo* ScopeTable::class_of_body(NodeId body) const {
  auto it = class_by_body_.find(body);
  return it == class_by_body_.end() ? nullptr : &classes_[it->second];
}

const ClassInfo* ScopeTable::enclosing_class(NodeId at) const {
  for (NodeId a = at; a != kNoNode; a = tree_->node(a).parent)
    if (tree_->kind(a) == NodeKind::ClassBody)
      if (auto* c = class_of_body(a)) return c;
  return nullptr;
}

const ClassInfo* ScopeTable::class_named(std::string_view simple) const {
  if (simple.empty()) return nullptr;
  for (const auto& c : classes_)
    if (c.name == simple) return &c;
  return nullptr;
}

const FieldInfo* ScopeTable::field_of(const ClassInfo& cls, std::string_view name) const {
  for (const ClassInfo* c = &cls; c;) {
    auto it = c->fields.find(std::string(name));
    if (it != c->fields.end()) return &it->second;
    auto* next = class_named(c->superclass);
    c = next == c ? nullptr : next;
  }
  return nullptr;
}

const std::vector<MethodInfo>* ScopeTable::methods_of(const ClassInfo& cls, std::string_view name) const {
  int guard = 0;
  for (const ClassInfo* c = &cls; c && guard++ < 64;) {
    auto it = c->methods.find(std::string(name));
    if (it != c->methods.end()) return &it->second;
    auto* next = class_named(c->superclass);
    c = next == c ? nullptr : next;
  }
  return nullptr;
}

bool ScopeTable::extends_class(std::string_view simple, std::string_view qualified) const {
  int guard = 0;
  for (const ClassInfo* c = class_named(simple); c && guard++ < 64;) {
    if (c->superclass.empty()) return false;
    auto h = resolve_type_text(c->superclass);
    if (h.is_known(qualified)) return true;
    auto* next = class_named(c->superclass);
    c = next == c ? nullptr : next;
  }
  return false;
}

bool ScopeTable::is_subtype_of(const TypeHint& hint, std::string_view qualified) const {
  if (hint.is_known(qualified)) return true;
  return hint.category() == HintCategory::UserClass && extends_class(hint.name, qualified);
}

TypeHint ScopeTable::resolve_type_text(std::string_view text) const { return hint_from_name(text, *table_, user_classes_); }

TypeHint ScopeTable::type_hint(NodeId type_node) const {
  if (type_node == kNoNode || tree_->kind(type_node) != NodeKind::Type) return TypeHint::unknown();
  std::string name;
  int dims = 0;
  for (auto c : tree_->node(type_node).children) {
    if (!tree_->is_token(c)) continue;  // annotations, type arguments
    auto t = tree_->text(c);
    if (t == "[") {
      ++dims;
    } else if (t != "]") {
      name += t;
    }
  }
  return TypeHint::array_of(resolve_type_text(name), dims);
}

const std::vector<ScopeTable::Local>* ScopeTable::locals_of(NodeId owner) const {
  auto it = scopes_.find(owner);
  return it == scopes_.end() ? nullptr : &it->second;
}

std::size_t ScopeTable::local_count() const {
  std::size_t n = 0;
  for (const auto& [_, v] : scopes_) n += v.size();
  return n;
}

namespace {

std::string simple_type_name(const SyntaxTree& tree, NodeId type_node) {
  std::string last;
  for (auto c : tree.node(type_node).children)
    if (tree.is_token(c) && tree.token_of(c).kind == TokenKind::Identifier) last = std::string(tree.text(c));
  return last;
}

int extra_dims(const SyntaxTree& tree, NodeId decl) {
  int dims = 0;
  for (auto c : tree.node(decl).children)
    if (tree.is_token(c, "[")) ++dims;
  return dims;
}

}  // namespace

ScopeTable build_scopes(const SyntaxTree& tree, std::shared_ptr<const TypeTable> table) {
  ScopeTable st;
  st.tree_ = &tree;
  st.table_ = std::move(table);

  // pass 1: class names, so that type resolution knows the file's classes
  tree.walk(tree.root, [&](NodeId id) {
    auto k = tree.kind(id);
    if (k == NodeKind::ClassDecl || k == NodeKind::InterfaceDecl || k == NodeKind::EnumDecl)
      st.user_classes_.insert(std::string(declared_name(tree, id)));
    return k != NodeKind::Verbatim;
  });

  // pass 2: class shells
  tree.walk(tree.root, [&](NodeId id) {
    auto k = tree.kind(id);
    if (k == NodeKind::Verbatim) return false;
    ClassInfo info;
    if (k == NodeKind::ClassDecl || k == NodeKind::InterfaceDecl || k == NodeKind::EnumDecl) {
      info.name = std::string(declared_name(tree, id));
      info.decl = id;
      info.body = tree.child(id, NodeKind::ClassBody);
      if (auto ext = tree.child(id, NodeKind::ExtendsClause); ext != kNoNode) {
        auto types = tree.children(ext, NodeKind::Type);
        if (k == NodeKind::InterfaceDecl) {
          for (auto t : types) info.interfaces.push_back(simple_type_name(tree, t));
        } else if (!types.empty()) {
          info.superclass = simple_type_name(tree, types.front());
        }
      }
      if (auto impl = tree.child(id, NodeKind::ImplementsClause); impl != kNoNode)
        for (auto t : tree.children(impl, NodeKind::Type)) info.interfaces.push_back(simple_type_name(tree, t));
    } else if (k == NodeKind::ObjectCreation && tree.child(id, NodeKind::ClassBody) != kNoNode) {
      info.decl = id;
      info.body = tree.child(id, NodeKind::ClassBody);
      auto base = simple_type_name(tree, tree.child(id, NodeKind::Type));
      info.superclass = base;
      info.interfaces.push_back(base);
    } else if (k == NodeKind::EnumConstant && tree.child(id, NodeKind::ClassBody) != kNoNode) {
      info.decl = id;
      info.body = tree.child(id, NodeKind::ClassBody);
      auto decl = tree.ancestor(id, NodeKind::EnumDecl);
      if (decl != kNoNode) info.superclass = std::string(declared_name(tree, decl));
    } else {
      return true;
    }
    if (info.body == kNoNode) return true;
    st.class_by_body_[info.body] = st.classes_.size();
    st.classes_.push_back(std::move(info));
    return true;
  });

  auto add_local = [&](NodeId owner, std::string name, TypeHint hint, std::uint32_t from, NodeId decl,
                       NodeId var_init = kNoNode) {
    st.scopes_[owner].push_back({std::move(name), std::move(hint), from, decl, var_init});
  };
  auto add_params = [&](NodeId method) {
    auto plist = tree.child(method, NodeKind::ParamList);
    if (plist == kNoNode) return;
    for (auto p : tree.children(plist, NodeKind::Parameter)) {
      auto hint = st.type_hint(tree.child(p, NodeKind::Type));
      if (tree.child_token(p, "...") != kNoNode) hint = TypeHint::array_of(hint);
      hint = TypeHint::array_of(hint, extra_dims(tree, p));
      add_local(method, std::string(declared_name(tree, p)), hint, tree.node(method).start, p);
    }
  };

  // pass 3: members and locals
  tree.walk(tree.root, [&](NodeId id) {
    auto k = tree.kind(id);
    if (k == NodeKind::Verbatim) return false;
    NodeId parent = tree.node(id).parent;
    switch (k) {
      case NodeKind::FieldDecl: {
        auto* cls = parent == kNoNode ? nullptr : st.class_of_body(parent);
        if (!cls) break;
        auto& info = st.classes_[st.class_by_body_[parent]];
        auto base = st.type_hint(tree.child(id, NodeKind::Type));
        bool is_static = has_modifier(tree, id, "static") ||
                         (info.decl != kNoNode && tree.kind(info.decl) == NodeKind::InterfaceDecl);
        for (auto d : tree.children(id, NodeKind::VarDeclarator))
          info.fields[std::string(declared_name(tree, d))] = {TypeHint::array_of(base, extra_dims(tree, d)), is_static, d};
        break;
      }
      case NodeKind::EnumConstant: {
        auto body = parent;
        auto decl = body == kNoNode ? kNoNode : tree.node(body).parent;
        if (decl == kNoNode || tree.kind(decl) != NodeKind::EnumDecl || !st.class_of_body(body)) break;
        auto& info = st.classes_[st.class_by_body_[body]];
        info.fields[std::string(declared_name(tree, id))] = {TypeHint::user(info.name), true, id};
        break;
      }
      case NodeKind::MethodDecl: {
        if (parent != kNoNode && st.class_of_body(parent)) {
          auto& info = st.classes_[st.class_by_body_[parent]];
          auto plist = tree.child(id, NodeKind::ParamList);
          std::size_t count = plist == kNoNode ? 0 : tree.children(plist, NodeKind::Parameter).size();
          auto ret = st.type_hint(tree.child(id, NodeKind::Type));
          info.methods[std::string(declared_name(tree, id))].push_back({ret, count, id});
        }
        add_params(id);
        break;
      }
      case NodeKind::ConstructorDecl:
        add_params(id);
        break;
      case NodeKind::LocalVarDecl: {
        auto type = tree.child(id, NodeKind::Type);
        bool is_var = tree.text(type) == "var" && !st.user_classes_.count("var");
        auto base = st.type_hint(type);
        for (auto d : tree.children(id, NodeKind::VarDeclarator)) {
          NodeId init = kNoNode;
          if (is_var) {
            for (auto c : tree.node(d).children)
              if (is_expression(tree.kind(c))) init = c;
          }
          add_local(parent, std::string(declared_name(tree, d)), TypeHint::array_of(base, extra_dims(tree, d)),
                    tree.node(d).start, d, init);
        }
        break;
      }
      case NodeKind::ForEachStmt: {
        auto type = tree.child(id, NodeKind::Type);
        NodeId name = kNoNode;
        for (auto c : tree.node(id).children)
          if (tree.is_token(c) && tree.token_of(c).kind == TokenKind::Identifier) {
            name = c;
            break;
          }
        if (name == kNoNode) break;
        NodeId init = kNoNode;
        bool is_var = tree.text(type) == "var";
        add_local(id, std::string(tree.text(name)), is_var ? TypeHint::unknown() : st.type_hint(type),
                  tree.node(name).start, id, init);
        break;
      }
      case NodeKind::CatchParam: {
        auto types = tree.children(id, NodeKind::Type);
        auto hint = types.size() == 1 ? st.type_hint(types.front()) : TypeHint::unknown();
        add_local(parent, std::string(declared_name(tree, id)), hint, tree.node(id).start, id);
        break;
      }
      case NodeKind::Resource: {
        auto type = tree.child(id, NodeKind::Type);
        if (type == kNoNode) break;
        auto spec = parent;
        auto tryst = spec == kNoNode ? kNoNode : tree.node(spec).parent;
        if (tryst == kNoNode) break;
        NodeId init = kNoNode;
        bool is_var = tree.text(type) == "var";
        if (is_var)
          for (auto c : tree.node(id).children)
            if (is_expression(tree.kind(c))) init = c;
        add_local(tryst, std::string(declared_name(tree, id)), st.type_hint(type), tree.node(id).start, id, init);
        break;
      }
      default:
        break;
    }
    return true;
  });
  return st;
}

// ---- expression typing ----

namespace {

TypeHint unify_returns(const std::vector<MethodInfo>& ms) {
  if (ms.empty()) return TypeHint::unknown();
  for (const auto& m : ms)
    if (!(m.returns == ms.front().returns)) return TypeHint::unknown();
  return ms.front().returns;
}

TypeHint literal_type(const SyntaxTree& tree, NodeId lit) {
  auto tok = tree.node(lit).children.front();
  auto text = tree.text(tok);
  switch (tree.token_of(tok).kind) {
    case TokenKind::IntLiteral: return TypeHint::primitive(Prim::Int);
    case TokenKind::LongLiteral: return TypeHint::primitive(Prim::Long);
    case TokenKind::FloatLiteral: return TypeHint::primitive(Prim::Float);
    case TokenKind::DoubleLiteral: return TypeHint::primitive(Prim::Double);
    case TokenKind::CharLiteral: return TypeHint::primitive(Prim::Char);
    case TokenKind::StringLiteral:
    case TokenKind::TextBlock: return TypeHint::string();
    default: break;
  }
  if (text == "true" || text == "false") return boolean();
  return TypeHint::unknown();  // null
}

// Method return on a receiver type, consulting file classes and the JDK table.
TypeHint method_on(const TypeHint& recv, std::string_view method, const ScopeTable& st) {
  if (recv.is_unknown()) return TypeHint::unknown();
  const auto& table = st.table();
  auto from_text = [&](const std::string& ret) { return ret.empty() ? TypeHint::unknown() : st.resolve_type_text(ret); };
  if (recv.category() == HintCategory::UserClass) {
    if (auto* cls = st.class_named(recv.name)) {
      if (auto* ms = st.methods_of(*cls, method)) return unify_returns(*ms);
      // inherited from a known superclass somewhere up the chain
      int guard = 0;
      for (const ClassInfo* c = cls; c && guard++ < 64; c = st.class_named(c->superclass)) {
        if (c->superclass.empty()) break;
        auto sup = st.resolve_type_text(c->superclass);
        if (sup.category() == HintCategory::KnownClass) {
          if (auto r = table.method_return(sup.name, method); !r.empty()) return from_text(r);
          break;
        }
        if (st.class_named(c->superclass) == c) break;
      }
    }
  } else if (!recv.is_array()) {
    if (auto r = table.method_return(owner_name(recv), method); !r.empty()) return from_text(r);
  }
  return from_text(table.method_return("*", method));
}

TypeHint invocation_type(NodeId inv, const ScopeTable& st) {
  const auto& tree = st.tree();
  auto parts = invocation_parts(tree, inv);
  if (parts.name == kNoNode) return TypeHint::unknown();
  auto name = tree.text(parts.name);
  if (name == "this" || name == "super") return TypeHint::unknown();
  if (parts.receiver == kNoNode) {
    for (NodeId a = inv; a != kNoNode; a = tree.node(a).parent) {
      if (tree.kind(a) != NodeKind::ClassBody) continue;
      if (auto* cls = st.class_of_body(a))
        if (auto* ms = st.methods_of(*cls, name)) return unify_returns(*ms);
    }
    return TypeHint::unknown();
  }
  // static call through a class name, e.g. Thread.currentThread()
  auto dotted = dotted_name(tree, parts.receiver);
  if (!dotted.empty() && !st.lookup_local(first_segment(dotted), parts.receiver) &&
      !st.lookup_field(first_segment(dotted), parts.receiver)) {
    auto cls = st.resolve_type_text(dotted);
    bool looks_like_type = dotted.find('.') != std::string::npos || std::isupper(static_cast<unsigned char>(dotted[0]));
    if (!looks_like_type) return TypeHint::unknown();
    if (cls.category() == HintCategory::UserClass && !st.class_named(cls.name)) return TypeHint::unknown();
    auto owner = owner_name(cls);
    if (!owner.empty()) {
      auto r = st.table().method_return(owner, name);
      return r.empty() ? TypeHint::unknown() : st.resolve_type_text(r);
    }
    return method_on(cls, name, st);
  }
  return method_on(expr_type(parts.receiver, st), name, st);
}

TypeHint field_access_type(NodeId fa, const ScopeTable& st) {
  const auto& tree = st.tree();
  const auto& ch = tree.node(fa).children;
  if (ch.size() != 3 || !tree.is_token(ch[2])) return TypeHint::unknown();
  auto member = tree.text(ch[2]);
  auto recv = ch[0];
  if (tree.kind(recv) == NodeKind::This) {
    auto* cls = st.enclosing_class(fa);
    if (!cls) return TypeHint::unknown();
    auto* f = st.field_of(*cls, member);
    return f ? f->hint : TypeHint::unknown();
  }
  auto dotted = dotted_name(tree, recv);
  if (!dotted.empty() && dotted.find('.') == std::string::npos && !st.lookup_local(dotted, recv) &&
      !st.lookup_field(dotted, recv)) {
    // static field of a class declared in this file
    if (auto* cls = st.class_named(dotted)) {
      auto* f = st.field_of(*cls, member);
      return f ? f->hint : TypeHint::unknown();
    }
    return TypeHint::unknown();
  }
  auto rh = expr_type(recv, st);
  if (rh.is_array() && member == "length") return TypeHint::primitive(Prim::Int);
  if (rh.category() == HintCategory::UserClass) {
    if (auto* cls = st.class_named(rh.name))
      if (auto* f = st.field_of(*cls, member)) return f->hint;
  }
  return TypeHint::unknown();
}

TypeHint binary_type(NodeId bin, const ScopeTable& st) {
  auto parts = binary_parts(st.tree(), bin);
  if (parts.left == kNoNode || parts.right == kNoNode) return TypeHint::unknown();
  auto l = expr_type(parts.left, st);
  auto r = expr_type(parts.right, st);
  if (l.is_unknown() || r.is_unknown()) return TypeHint::unknown();
  const auto& op = parts.op;
  if (op == "+" && (l.is_string() || r.is_string())) return TypeHint::string();
  if (op == "+" || op == "-" || op == "*" || op == "/" || op == "%") return numeric_promotion(l, r);
  if (op == "<<" || op == ">>" || op == ">>>") {
    if (unary_promotion(r).is_unknown()) return TypeHint::unknown();
    return unary_promotion(l);
  }
  if (op == "&" || op == "|" || op == "^") {
    if (unboxed(l) == Prim::Boolean && unboxed(r) == Prim::Boolean) return boolean();
    return numeric_promotion(l, r);
  }
  if (op == "&&" || op == "||") {
    return unboxed(l) == Prim::Boolean && unboxed(r) == Prim::Boolean ? boolean() : TypeHint::unknown();
  }
  if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=") return boolean();
  return TypeHint::unknown();
}

}  // namespace

TypeHint expr_type(NodeId expr, const ScopeTable& st) {
  if (expr == kNoNode) return TypeHint::unknown();
  const auto& tree = st.tree();
  switch (tree.kind(expr)) {
    case NodeKind::Literal: return literal_type(tree, expr);
    case NodeKind::Name: return st.lookup(tree.text(expr), expr);
    case NodeKind::Parens: return expr_type(strip_parens(tree, expr), st);
    case NodeKind::This: {
      auto* cls = st.enclosing_class(expr);
      return cls && !cls->name.empty() ? TypeHint::user(cls->name) : TypeHint::unknown();
    }
    case NodeKind::ObjectCreation: return st.type_hint(tree.child(expr, NodeKind::Type));
    case NodeKind::ArrayCreation: {
      int dims = 0;
      for (auto c : tree.node(expr).children)
        if (tree.kind(c) == NodeKind::DimExpr || tree.is_token(c, "[")) ++dims;
      return TypeHint::array_of(st.type_hint(tree.child(expr, NodeKind::Type)), dims);
    }
    case NodeKind::ArrayAccess: return expr_type(tree.node(expr).children.front(), st).element();
    case NodeKind::Cast: return st.type_hint(tree.child(expr, NodeKind::Type));
    case NodeKind::Assignment: return expr_type(tree.node(expr).children.front(), st);
    case NodeKind::MethodInvocation: return invocation_type(expr, st);
    case NodeKind::FieldAccess: return field_access_type(expr, st);
    case NodeKind::Binary: return binary_type(expr, st);
    case NodeKind::InstanceOf:
      return expr_type(tree.node(expr).children.front(), st).is_unknown() ? TypeHint::unknown() : boolean();
    case NodeKind::Unary: {
      auto op = operator_text(tree, expr);
      auto operand = expression_children(tree, expr);
      if (operand.empty()) return TypeHint::unknown();
      auto h = expr_type(operand.front(), st);
      if (op == "!") return unboxed(h) == Prim::Boolean ? boolean() : TypeHint::unknown();
      if (op == "++" || op == "--") return h;
      return unary_promotion(h);
    }
    case NodeKind::Postfix: return expr_type(tree.node(expr).children.front(), st);
    case NodeKind::Conditional: {
      auto parts = expression_children(tree, expr);
      if (parts.size() != 3) return TypeHint::unknown();
      auto t = expr_type(parts[1], st);
      auto e = expr_type(parts[2], st);
      if (t.is_unknown() || e.is_unknown()) return TypeHint::unknown();
      if (t == e) return t;
      return numeric_promotion(t, e);
    }
    default: return TypeHint::unknown();
  }
}

}  // namespace jrepair
