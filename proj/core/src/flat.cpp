#include "catt/flat.hpp"

#include <algorithm>

namespace catt::flat {

namespace {

const std::shared_ptr<const TermNode>& var_zero() {
  static const auto n = std::make_shared<const TermNode>();
  return n;
}

}  // namespace

Type Type::arrow(Term src, Type base, Term tgt) {
  Type t;
  const std::size_t d = base.dim() + 1;
  t.n_ = std::make_shared<const TypeNode>(TypeNode{std::move(src), std::move(base), std::move(tgt), d});
  return t;
}

std::size_t Type::dim() const { return n_ ? n_->dim : 0; }

const Term& Type::src() const {
  if (!n_) throw malformed("source of ⋆");
  return n_->src;
}

const Type& Type::base() const {
  if (!n_) throw malformed("base of ⋆");
  return n_->base;
}

const Term& Type::tgt() const {
  if (!n_) throw malformed("target of ⋆");
  return n_->tgt;
}

bool operator==(const Type& a, const Type& b) {
  if (a.n_ == b.n_) return true;
  if (!a.n_ || !b.n_) return false;
  return a.n_->dim == b.n_->dim && a.n_->src == b.n_->src && a.n_->tgt == b.n_->tgt &&
         a.n_->base == b.n_->base;
}

Term::Term() : n_(var_zero()) {}

Term Term::var(std::size_t index) {
  if (index == 0) return Term(var_zero());
  auto n = std::make_shared<TermNode>();
  n->index = index;
  return Term(std::move(n));
}

Term Term::coh(Ctx ctx, Type ty, Sub sub) {
  if (sub.terms.size() != ctx.size()) throw malformed("coherence substitution has wrong arity");
  if (!sub.ty.is_star()) throw malformed("coherence substitution must be regular");
  auto n = std::make_shared<TermNode>();
  n->is_var = false;
  n->ctx = std::move(ctx);
  n->type = std::move(ty);
  n->sub = std::move(sub);
  return Term(std::move(n));
}

bool Term::is_var() const { return n_->is_var; }
std::size_t Term::index() const { return n_->index; }
const Ctx& Term::ctx() const { return n_->ctx; }
const Type& Term::type() const { return n_->type; }
const Sub& Term::sub() const { return n_->sub; }

bool operator==(const Term& a, const Term& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->is_var != b.n_->is_var) return false;
  if (a.n_->is_var) return a.n_->index == b.n_->index;
  return a.n_->sub == b.n_->sub && a.n_->type == b.n_->type && a.n_->ctx == b.n_->ctx;
}

Term substitute(const Term& t, const Sub& s) {
  const std::size_t n = s.terms.size();
  if (t.is_var()) {
    if (t.index() >= n) throw malformed("variable index out of range in substitution");
    return s.terms[level_of(n, t.index())];
  }
  if (s.ty.is_star()) return Term::coh(t.ctx(), t.type(), compose(t.sub(), s));
  Term susp = Term::coh(suspend(t.ctx()), suspend(t.type(), t.ctx().size()), suspend(t.sub(), n));
  return substitute(susp, unrestrict(s));
}

Type substitute(const Type& a, const Sub& s) {
  if (a.is_star()) return s.ty;
  return Type::arrow(substitute(a.src(), s), substitute(a.base(), s), substitute(a.tgt(), s));
}

Sub compose(const Sub& tau, const Sub& sigma) {
  Sub r;
  r.ty = substitute(tau.ty, sigma);
  r.terms.reserve(tau.terms.size());
  for (const auto& t : tau.terms) r.terms.push_back(substitute(t, sigma));
  return r;
}

Ctx suspend(const Ctx& g) {
  Ctx r{Type::star(), Type::star()};
  r.reserve(g.size() + 2);
  for (std::size_t i = 0; i < g.size(); ++i) r.push_back(suspend(g[i], i));
  return r;
}

Term suspend(const Term& t, std::size_t n) {
  if (t.is_var()) return t;
  return Term::coh(suspend(t.ctx()), suspend(t.type(), t.ctx().size()), suspend(t.sub(), n));
}

Type suspend(const Type& a, std::size_t n) {
  if (a.is_star()) return Type::arrow(Term::var(n + 1), Type::star(), Term::var(n));
  return Type::arrow(suspend(a.src(), n), suspend(a.base(), n), suspend(a.tgt(), n));
}

Sub suspend(const Sub& s, std::size_t n) {
  Sub r;
  r.ty = suspend(s.ty, n);
  r.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) r.terms.push_back(suspend(t, n));
  return unrestrict(r);
}

Sub restrict(const Sub& s) {
  if (s.terms.size() < 2) throw malformed("restriction needs two leading terms");
  Sub r;
  r.ty = Type::arrow(s.terms[0], s.ty, s.terms[1]);
  r.terms.assign(s.terms.begin() + 2, s.terms.end());
  return r;
}

Sub unrestrict(const Sub& s) {
  if (s.ty.is_star()) throw malformed("unrestriction of a regular substitution");
  Sub r;
  r.ty = s.ty.base();
  r.terms.reserve(s.terms.size() + 2);
  r.terms.push_back(s.ty.src());
  r.terms.push_back(s.ty.tgt());
  r.terms.insert(r.terms.end(), s.terms.begin(), s.terms.end());
  return r;
}

Term weaken(const Term& t) {
  if (t.is_var()) return Term::var(t.index() + 1);
  return Term::coh(t.ctx(), t.type(), weaken(t.sub()));
}

Type weaken(const Type& a) {
  if (a.is_star()) return a;
  return Type::arrow(weaken(a.src()), weaken(a.base()), weaken(a.tgt()));
}

Sub weaken(const Sub& s) {
  Sub r;
  r.ty = weaken(s.ty);
  r.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) r.terms.push_back(weaken(t));
  return r;
}

Sub identity_sub(std::size_t n) {
  Sub r;
  r.terms.reserve(n);
  for (std::size_t l = 0; l < n; ++l) r.terms.push_back(Term::var(index_of(n, l)));
  return r;
}

Sub identity_sub(const Ctx& g) { return identity_sub(g.size()); }

Type sphere_type(std::size_t n) {
  if (n == 0) return Type::star();
  return Type::arrow(Term::var(1), weaken(weaken(sphere_type(n - 1))), Term::var(0));
}

Ctx sphere(std::size_t n) {
  if (n == 0) return {};
  Ctx g = disc(n - 1);
  g.push_back(weaken(sphere_type(n - 1)));
  return g;
}

Ctx disc(std::size_t n) {
  Ctx g = sphere(n);
  g.push_back(sphere_type(n));
  return g;
}

Sub sub_from_disc(const Type& a) {
  if (a.is_star()) return Sub{};
  Sub r = sub_from_disc(a.base());
  r.terms.push_back(a.src());
  r.terms.push_back(a.tgt());
  return r;
}

Sub sub_from_disc(const Type& a, const Term& t) {
  Sub r = sub_from_disc(a);
  r.terms.push_back(t);
  return r;
}

Term identity(const Type& a, const Term& t) {
  const std::size_t n = a.dim();
  return Term::coh(disc(n), Type::arrow(Term::var(0), weaken(sphere_type(n)), Term::var(0)),
                   sub_from_disc(a, t));
}

namespace {

// Dimension n when t is a coherence over D^n, otherwise -1.
long disc_head(const Term& t) {
  if (t.is_var()) return -1;
  const auto& g = t.ctx();
  if (g.size() % 2 == 0) return -1;
  const std::size_t n = (g.size() - 1) / 2;
  if (!(g == disc(n))) return -1;
  return static_cast<long>(n);
}

}  // namespace

bool is_identity(const Term& t) {
  const long n = disc_head(t);
  if (n < 0) return false;
  const auto& a = t.type();
  return !a.is_star() && a.src() == Term::var(0) && a.tgt() == Term::var(0) &&
         a.base() == weaken(sphere_type(static_cast<std::size_t>(n)));
}

bool is_unary_composite(const Term& t) {
  const long n = disc_head(t);
  if (n < 0) return false;
  return t.type() == weaken(sphere_type(static_cast<std::size_t>(n)));
}

VarSet free_vars(const Term& t, std::size_t n) {
  if (t.is_var()) {
    if (t.index() >= n) throw malformed("variable index out of range");
    VarSet v(n, false);
    v[level_of(n, t.index())] = true;
    return v;
  }
  return free_vars(t.sub(), n);
}

VarSet free_vars(const Type& a, std::size_t n) {
  if (a.is_star()) return VarSet(n, false);
  VarSet v = free_vars(a.src(), n);
  v = set_union(std::move(v), free_vars(a.base(), n));
  return set_union(std::move(v), free_vars(a.tgt(), n));
}

VarSet free_vars(const Sub& s, std::size_t n) {
  VarSet v = free_vars(s.ty, n);
  for (const auto& t : s.terms) v = set_union(std::move(v), free_vars(t, n));
  return v;
}

VarSet downward_close(const Ctx& g, VarSet v) {
  if (v.size() != g.size()) throw malformed("variable set does not match context");
  for (std::size_t k = g.size(); k-- > 0;) {
    if (!v[k]) continue;
    const VarSet below = free_vars(g[k], k);
    for (std::size_t j = 0; j < k; ++j)
      if (below[j]) v[j] = true;
  }
  return v;
}

VarSet support(const Ctx& g, const Term& t) { return downward_close(g, free_vars(t, g.size())); }
VarSet support(const Ctx& g, const Type& a) { return downward_close(g, free_vars(a, g.size())); }

VarSet apply_set(const VarSet& v, const Sub& s, std::size_t n) {
  if (v.size() != s.terms.size()) throw malformed("variable set does not match substitution");
  VarSet r(n, false);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k]) r = set_union(std::move(r), free_vars(s.terms[k], n));
  return r;
}

VarSet suspend(const VarSet& v) {
  VarSet r{true, true};
  r.insert(r.end(), v.begin(), v.end());
  return r;
}

VarSet full_set(std::size_t n) { return VarSet(n, true); }

VarSet set_union(VarSet a, const VarSet& b) {
  if (a.size() != b.size()) throw malformed("variable sets over different contexts");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] = true;
  return a;
}

Type var_type(const Ctx& g, std::size_t index) {
  if (index >= g.size()) throw malformed("variable index out of range");
  Type a = g[level_of(g.size(), index)];
  for (std::size_t i = 0; i <= index; ++i) a = weaken(a);
  return a;
}

Type canonical_type(const Ctx& g, const Term& t) {
  if (t.is_var()) return var_type(g, t.index());
  return substitute(t.type(), t.sub());
}

std::size_t dim(const Ctx& g) {
  std::size_t d = 0;
  for (const auto& a : g) d = std::max(d, a.dim());
  return d;
}

std::size_t max_index(const Term& t) {
  if (t.is_var()) return t.index() + 1;
  std::size_t m = 0;
  for (const auto& u : t.sub().terms) m = std::max(m, max_index(u));
  return m;
}

std::string show(const Term& t) {
  if (t.is_var()) return "#" + std::to_string(t.index());
  return "Coh(" + show(t.ctx()) + " ; " + show(t.type()) + ")" + show(t.sub());
}

std::string show(const Type& a) {
  if (a.is_star()) return "*";
  return "(" + show(a.src()) + " ->[" + show(a.base()) + "] " + show(a.tgt()) + ")";
}

std::string show(const Sub& s) {
  std::string r = "<";
  if (!s.ty.is_star()) r += show(s.ty) + " | ";
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) r += ", ";
    r += show(s.terms[i]);
  }
  return r + ">";
}

std::string show(const Ctx& g) {
  std::string r;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) r += ", ";
    r += show(g[i]);
  }
  return "[" + r + "]";
}

}  // namespace catt::flat
