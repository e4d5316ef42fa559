#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Flat CATT syntax with de Bruijn indices counted from the end of the context.

namespace catt::flat {

struct TermNode;
struct TypeNode;
class Term;
struct Sub;

class Type {
public:
  Type() = default;  // ⋆
  static Type star() { return Type(); }
  static Type arrow(Term src, Type base, Term tgt);

  bool is_star() const { return n_ == nullptr; }
  std::size_t dim() const;
  const Term& src() const;
  const Type& base() const;
  const Term& tgt() const;

  friend bool operator==(const Type& a, const Type& b);

private:
  std::shared_ptr<const TypeNode> n_;
};

using Ctx = std::vector<Type>;

class Term {
public:
  Term();  // Var(0)
  static Term var(std::size_t index);
  static Term coh(Ctx ctx, Type ty, Sub sub);

  bool is_var() const;
  std::size_t index() const;
  const Ctx& ctx() const;
  const Type& type() const;
  const Sub& sub() const;

  friend bool operator==(const Term& a, const Term& b);

private:
  explicit Term(std::shared_ptr<const TermNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const TermNode> n_;
};

struct Sub {
  Type ty;
  std::vector<Term> terms;  // one per domain variable, in context order

  friend bool operator==(const Sub& a, const Sub& b) {
    return a.ty == b.ty && a.terms == b.terms;
  }
};

struct TypeNode {
  Term src;
  Type base;
  Term tgt;
  std::size_t dim;
};

struct TermNode {
  bool is_var = true;
  std::size_t index = 0;
  Ctx ctx;
  Type type;
  Sub sub;
};

struct malformed : std::logic_error {
  using std::logic_error::logic_error;
};

// Variable sets are boolean vectors indexed by context position (level).
using VarSet = std::vector<bool>;

// Conversions between a de Bruijn index and a context position.
inline std::size_t level_of(std::size_t n, std::size_t index) { return n - 1 - index; }
inline std::size_t index_of(std::size_t n, std::size_t level) { return n - 1 - level; }

Term substitute(const Term& t, const Sub& s);
Type substitute(const Type& a, const Sub& s);
Sub compose(const Sub& tau, const Sub& sigma);

// The length of the context the syntax lives in is needed for N and S.
Ctx suspend(const Ctx& g);
Term suspend(const Term& t, std::size_t n);
Type suspend(const Type& a, std::size_t n);
Sub suspend(const Sub& s, std::size_t n);  // n is the codomain length

Sub restrict(const Sub& s);
Sub unrestrict(const Sub& s);

Term weaken(const Term& t);
Type weaken(const Type& a);
Sub weaken(const Sub& s);

Sub identity_sub(const Ctx& g);
Sub identity_sub(std::size_t n);

Ctx disc(std::size_t n);
Ctx sphere(std::size_t n);
Type sphere_type(std::size_t n);  // U^n over S^n
Sub sub_from_disc(const Type& a);
Sub sub_from_disc(const Type& a, const Term& t);

// Coherences over discs.
Term identity(const Type& a, const Term& t);  // id(A,t)
bool is_identity(const Term& t);
bool is_unary_composite(const Term& t);

VarSet free_vars(const Term& t, std::size_t n);
VarSet free_vars(const Type& a, std::size_t n);
VarSet free_vars(const Sub& s, std::size_t n);
VarSet downward_close(const Ctx& g, VarSet v);
VarSet support(const Ctx& g, const Term& t);
VarSet support(const Ctx& g, const Type& a);
VarSet apply_set(const VarSet& v, const Sub& s, std::size_t n);
VarSet suspend(const VarSet& v);
VarSet full_set(std::size_t n);
VarSet set_union(VarSet a, const VarSet& b);

Type canonical_type(const Ctx& g, const Term& t);
Type var_type(const Ctx& g, std::size_t index);

std::size_t dim(const Ctx& g);
std::size_t max_index(const Term& t);  // 1 + largest index, 0 if closed

std::string show(const Term& t);
std::string show(const Type& a);
std::string show(const Sub& s);
std::string show(const Ctx& g);

}  // namespace catt::flat
