#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catt/flat.hpp"
#include "catt/tree.hpp"

// Well-formed syntax produced by the typechecker. Terms are positioned either
// by de Bruijn levels (over a flat context) or by paths (over a tree).

namespace catt::core {

using tree::Path;
using tree::Tree;

using Level = std::size_t;
using Pos = std::variant<Level, Path>;

struct TermNode;
struct TypeNode;
class Type;
struct Sub;
struct Label;

enum class TermKind { Var, TopLvl, Coh, Id, Comp, Inc, AppSub, AppLabel, Susp };
enum class TypeKind { Star, Arrow, AppSub, AppLabel, Susp };

class Term {
public:
  Term();  // Var(level 0)

  static Term var(Pos p);
  static Term top_lvl(std::string name, Term body);
  static Term coh(Tree t, Type a);
  static Term id(std::size_t n);
  static Term comp(Tree t);
  static Term inc(std::size_t n, std::size_t m, Term inner);
  static Term app_sub(Term inner, Sub s);
  static Term app_label(Term inner, Label l);
  static Term susp(Term inner);

  TermKind kind() const;
  const TermNode* operator->() const { return n_.get(); }

  friend bool operator==(const Term& a, const Term& b);

private:
  explicit Term(std::shared_ptr<const TermNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const TermNode> n_;
};

class Type {
public:
  Type() = default;  // ⋆
  static Type star() { return Type(); }
  static Type arrow(Term src, Type base, Term tgt);
  static Type app_sub(Type inner, Sub s);
  static Type app_label(Type inner, Label l);
  static Type susp(Type inner);

  TypeKind kind() const;
  bool is_star() const { return n_ == nullptr; }
  const TypeNode* operator->() const { return n_.get(); }

  friend bool operator==(const Type& a, const Type& b);

private:
  explicit Type(std::shared_ptr<const TypeNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const TypeNode> n_;
};

struct Sub {
  Type ty;
  std::vector<Term> terms;

  friend bool operator==(const Sub&, const Sub&) = default;
};

struct Label {
  tree::Labelled<Term> tree;
  Type ty;

  friend bool operator==(const Label&, const Label&) = default;
};

struct TermNode {
  TermKind kind = TermKind::Var;
  Pos pos = Level{0};
  std::string name;
  Tree tree;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<Term> inner;
  Type type;
  Sub sub;
  Label label;
};

struct TypeNode {
  TypeKind kind = TypeKind::Arrow;
  std::optional<Term> src;
  std::optional<Term> tgt;
  Type base;  // Arrow base, or the inner type of the other constructors
  Sub sub;
  Label label;
};

// Contexts: a named flat context or a tree with optional names.
struct FlatCtx {
  std::vector<std::string> names;
  std::vector<Type> types;  // types[i] lives over levels < i

  friend bool operator==(const FlatCtx&, const FlatCtx&) = default;
};

struct TreeCtx {
  Tree tree;
  tree::Labelled<std::optional<std::string>> names;

  friend bool operator==(const TreeCtx&, const TreeCtx&) = default;
};

using Ctx = std::variant<FlatCtx, TreeCtx>;

TreeCtx unnamed(const Tree& t);
std::size_t ctx_size(const Ctx& c);
bool is_tree(const Ctx& c);
std::optional<std::string> name_of(const Ctx& c, const Pos& p);
std::optional<Pos> lookup(const Ctx& c, const std::string& name);

std::string to_name(const Pos& p);

// Path-positioned helpers.
Term path(Path p);
Label identity_label(const Tree& t);
Label label_of(tree::Labelled<Term> l, Type ty = Type::star());
Label paths_label(const tree::Labelled<Path>& l);

// Flattening into the flat syntax over the realised context. The scope is
// the tree ⌊T⌋ for path-positioned syntax and a context length for levels.
struct Scope {
  std::variant<std::size_t, Tree> of;

  static Scope tree(Tree t) { return Scope{std::move(t)}; }
  static Scope flat(std::size_t n) { return Scope{n}; }
  std::size_t length() const;
};

flat::Term flatten_core(const Term& t, const Scope& s);
flat::Type flatten_core(const Type& a, const Scope& s);
flat::Sub flatten_core(const Sub& s, const Scope& sc);
flat::Sub flatten_core(const Label& l, const Scope& sc);
flat::Term flatten_core(const Term& t, const Tree& t_scope);
flat::Type flatten_core(const Type& a, const Tree& t_scope);

// Flat syntax back to core syntax positioned over the same scope. Coherence
// contexts must be ps-contexts.
Term from_flat(const flat::Term& t, const Scope& s);
Type from_flat(const flat::Type& a, const Scope& s);

std::string show(const Term& t);
std::string show(const Type& a);

}  // namespace catt::core
