#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jrepair/syntax.hpp"

namespace jrepair {

enum class HintCategory : std::uint8_t { Unknown, Primitive, Boxed, String, Array, KnownClass, UserClass };
enum class Prim : std::uint8_t { None, Boolean, Byte, Short, Char, Int, Long, Float, Double };

std::string_view prim_name(Prim p);

/// Heuristic static type of an expression or declaration. Arrays are encoded
/// as an element base plus a dimension count; element() peels one dimension.
struct TypeHint {
  HintCategory base = HintCategory::Unknown;
  Prim prim = Prim::None;
  std::string name;  // boxed simple name, known-class qualified name, or user-class simple name
  int dims = 0;

  static TypeHint unknown() { return {}; }
  static TypeHint primitive(Prim p) { return {HintCategory::Primitive, p, {}, 0}; }
  static TypeHint boxed(std::string simple) { return {HintCategory::Boxed, Prim::None, std::move(simple), 0}; }
  static TypeHint string() { return {HintCategory::String, Prim::None, {}, 0}; }
  static TypeHint known(std::string qualified) { return {HintCategory::KnownClass, Prim::None, std::move(qualified), 0}; }
  static TypeHint user(std::string simple) { return {HintCategory::UserClass, Prim::None, std::move(simple), 0}; }
  static TypeHint array_of(TypeHint element, int extra_dims = 1);

  HintCategory category() const { return dims > 0 && base != HintCategory::Unknown ? HintCategory::Array : base; }
  bool is_unknown() const { return base == HintCategory::Unknown; }
  bool is_array() const { return category() == HintCategory::Array; }
  bool is_primitive(Prim p) const { return category() == HintCategory::Primitive && prim == p; }
  bool is_string() const { return category() == HintCategory::String; }
  bool is_boxed() const { return category() == HintCategory::Boxed; }
  bool is_known(std::string_view qualified) const { return category() == HintCategory::KnownClass && name == qualified; }
  TypeHint element() const;

  std::string to_string() const;
  bool operator==(const TypeHint&) const = default;
};

/// JDK knowledge: known classes, resource types, method return hints.
class TypeTable {
 public:
  /// Table built from the shipped signature data.
  static std::shared_ptr<const TypeTable> builtin();

  /// Parses the line format of the shipped data; throws std::runtime_error on bad lines.
  void load(std::string_view data);
  void add_known_class(const std::string& qualified);
  void add_closeable(const std::string& qualified);
  void add_method(const std::string& owner, const std::string& method, const std::string& returns);

  /// Qualified name for a simple or qualified known class name, or empty.
  std::string qualify(std::string_view name) const;
  bool is_closeable(std::string_view qualified) const { return closeable_.count(std::string(qualified)) > 0; }
  /// Return type text for owner.method; owner is a qualified name, "*" matches any known receiver.
  std::string method_return(std::string_view owner, std::string_view method) const;

  const std::set<std::string>& closeables() const { return closeable_; }

 private:
  std::map<std::string, std::string> simple_to_qualified_;
  std::set<std::string> known_;
  std::set<std::string> closeable_;
  std::map<std::pair<std::string, std::string>, std::string> methods_;
};

/// Hint for a type spelled as text (e.g. "int", "java.lang.String", "Foo[]").
TypeHint hint_from_name(std::string_view text, const TypeTable& table, const std::set<std::string>& user_classes);

struct FieldInfo {
  TypeHint hint;
  bool is_static = false;
  NodeId declarator = kNoNode;
};

struct MethodInfo {
  TypeHint returns;
  std::size_t param_count = 0;
  NodeId decl = kNoNode;
};

/// Class, interface, enum, or anonymous class body declared in the file.
struct ClassInfo {
  std::string name;  // empty for anonymous classes
  NodeId decl = kNoNode;
  NodeId body = kNoNode;
  std::string superclass;  // simple name as written, generic arguments dropped
  std::vector<std::string> interfaces;
  std::map<std::string, FieldInfo> fields;
  std::map<std::string, std::vector<MethodInfo>> methods;
};

class ScopeTable {
 public:
  struct Local {
    std::string name;
    TypeHint hint;
    std::uint32_t visible_from = 0;
    NodeId decl = kNoNode;   // declarator, parameter, resource, catch parameter, ...
    NodeId var_init = kNoNode;  // initializer of a `var` local, typed on demand
  };

  const SyntaxTree& tree() const { return *tree_; }
  const TypeTable& table() const { return *table_; }

  /// Declaration visible at `at` for `name`, searching locals, then fields of
  /// the enclosing classes (including superclasses declared in the file).
  const Local* lookup_local(std::string_view name, NodeId at) const;
  TypeHint lookup(std::string_view name, NodeId at) const;
  const FieldInfo* lookup_field(std::string_view name, NodeId at, const ClassInfo** owner = nullptr) const;

  /// Innermost class (or anonymous class body) enclosing `at`.
  const ClassInfo* enclosing_class(NodeId at) const;
  const ClassInfo* class_named(std::string_view simple) const;
  const ClassInfo* class_of_body(NodeId body) const;
  const std::vector<ClassInfo>& classes() const { return classes_; }

  /// True when the class (by simple name) is declared in the file and extends
  /// `qualified` directly or through other classes declared in the file.
  bool extends_class(std::string_view simple, std::string_view qualified) const;
  bool is_subtype_of(const TypeHint& hint, std::string_view qualified) const;

  /// Hint for a Type node, resolving file classes and known classes.
  TypeHint type_hint(NodeId type_node) const;
  TypeHint resolve_type_text(std::string_view text) const;

  /// All locals declared directly under `owner`, in declaration order.
  const std::vector<Local>* locals_of(NodeId owner) const;
  std::size_t local_count() const;

  const FieldInfo* field_of(const ClassInfo& cls, std::string_view name) const;
  const std::vector<MethodInfo>* methods_of(const ClassInfo& cls, std::string_view name) const;

 private:
  friend ScopeTable build_scopes(const SyntaxTree&, std::shared_ptr<const TypeTable>);
  friend TypeHint expr_type(NodeId, const ScopeTable&);

  const SyntaxTree* tree_ = nullptr;
  std::shared_ptr<const TypeTable> table_;
  std::unordered_map<NodeId, std::vector<Local>> scopes_;
  std::vector<ClassInfo> classes_;
  std::unordered_map<NodeId, std::size_t> class_by_body_;
  std::set<std::string> user_classes_;
  mutable int var_depth_ = 0;
};

ScopeTable build_scopes(const SyntaxTree& tree, std::shared_ptr<const TypeTable> table = TypeTable::builtin());

/// Binary numeric promotion over primitive (or unboxable) hints; unknown when not numeric.
TypeHint numeric_promotion(const TypeHint& a, const TypeHint& b);
/// Primitive behind a primitive or boxed hint, or Prim::None.
Prim unboxed(const TypeHint& h);

TypeHint expr_type(NodeId expr, const ScopeTable& scopes);

}  // namespace jrepair
