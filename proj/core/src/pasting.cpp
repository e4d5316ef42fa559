#include "catt/pasting.hpp"

namespace catt::ps {

using flat::Ctx;
using flat::Sub;
using flat::Term;
using flat::Type;

std::size_t DyckWord::ups() const {
  std::size_t u = 0;
  for (auto m : moves)
    if (m == Move::Up) ++u;
  return u;
}

std::size_t DyckWord::trailing_dim() const {
  const std::size_t u = ups();
  return u - (moves.size() - u);
}

bool DyckWord::valid() const {
  long h = 0;
  for (auto m : moves) {
    h += m == Move::Up ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

std::string show(const DyckWord& d) {
  std::string r = "⊖";
  for (auto m : d.moves) r += m == Move::Up ? "↑" : "↓";
  return r;
}

DyckWord disc_word(std::size_t n) {
  DyckWord d;
  d.moves.assign(n, Move::Up);
  d.moves.insert(d.moves.end(), n, Move::Down);
  return d;
}

PsDerivation derive_ps(const Ctx& g) {
  PsDerivation r;
  if (g.empty() || !g[0].is_star()) return r;
  // Current judgement Γ ⊢ x : a, with a scoped over the prefix of length len.
  std::size_t x = 0;
  Type a = Type::star();
  std::size_t len = 1;
  auto fail = [&](std::size_t at) {
    r.ok = false;
    r.failed_at = at;
    return r;
  };
  while (len < g.size()) {
    if (len + 1 >= g.size()) return fail(len);
    // PSD until the next entry's type matches.
    while (!(g[len] == a)) {
      if (a.is_star()) return fail(len);
      const Term t = a.tgt();
      if (!t.is_var()) return fail(len);
      x = flat::level_of(len, t.index());
      a = a.base();
      r.word.moves.push_back(Move::Down);
    }
    const Type fty = Type::arrow(Term::var(flat::index_of(len + 1, x)), flat::weaken(a), Term::var(0));
    if (!(g[len + 1] == fty)) return fail(len + 1);
    r.steps.push_back(Extension{x, len, len + 1, a.dim()});
    r.word.moves.push_back(Move::Up);
    x = len + 1;
    a = flat::weaken(fty);
    len += 2;
  }
  for (std::size_t i = a.dim(); i > 0; --i) r.word.moves.push_back(Move::Down);
  r.ok = true;
  return r;
}

bool check_ps(const Ctx& g) { return derive_ps(g).ok; }

Realisation dyck_realise(const DyckWord& d) {
  Realisation r{Ctx{Type::star()}, Type::star(), Term::var(0)};
  for (auto m : d.moves) {
    if (m == Move::Up) {
      r.ctx.push_back(r.ty);
      const Type fty = Type::arrow(flat::weaken(r.tm), flat::weaken(r.ty), Term::var(0));
      r.ctx.push_back(fty);
      r.ty = flat::weaken(fty);
      r.tm = Term::var(0);
    } else {
      if (r.ty.is_star()) throw flat::malformed("Dyck word goes below zero");
      r.tm = r.ty.tgt();
      r.ty = r.ty.base();
    }
  }
  return r;
}

std::vector<Peak> peaks(const DyckWord& d) {
  std::vector<Peak> r;
  for (std::size_t i = 0; i + 1 < d.moves.size(); ++i)
    if (d.moves[i] == Move::Up && d.moves[i + 1] == Move::Down) r.push_back(i);
  return r;
}

namespace {

void require_peak(const DyckWord& d, Peak p) {
  if (p + 1 >= d.moves.size() || d.moves[p] != Move::Up || d.moves[p + 1] != Move::Down)
    throw flat::malformed("not a peak");
}

std::size_t ups_before(const DyckWord& d, std::size_t pos) {
  std::size_t u = 0;
  for (std::size_t i = 0; i < pos; ++i)
    if (d.moves[i] == Move::Up) ++u;
  return u;
}

}  // namespace

std::size_t peak_level(const DyckWord& d, Peak p) {
  require_peak(d, p);
  return 2 + 2 * ups_before(d, p);
}

Term peak_var(const DyckWord& d, Peak p) {
  return Term::var(flat::index_of(d.variables(), peak_level(d, p)));
}

Pruned prune(const DyckWord& d, Peak p) {
  require_peak(d, p);
  Pruned r;
  r.word.moves = d.moves;
  r.word.moves.erase(r.word.moves.begin() + static_cast<long>(p), r.word.moves.begin() + static_cast<long>(p) + 2);

  DyckWord prefix;
  prefix.moves.assign(d.moves.begin(), d.moves.begin() + static_cast<long>(p));
  const Realisation e = dyck_realise(prefix);
  Sub pi = flat::identity_sub(e.ctx);
  pi.terms.push_back(e.tm);
  pi.terms.push_back(flat::identity(e.ty, e.tm));
  for (std::size_t i = p + 2; i < d.moves.size(); ++i) {
    if (d.moves[i] == Move::Down) continue;
    pi = flat::weaken(flat::weaken(pi));
    pi.terms.push_back(Term::var(1));
    pi.terms.push_back(Term::var(0));
  }
  r.pi = std::move(pi);
  return r;
}

Sub prune_sub(const Sub& s, const DyckWord& d, Peak p) {
  const std::size_t f = peak_level(d, p);
  if (s.terms.size() != d.variables()) throw flat::malformed("substitution does not match Dyck word");
  Sub r = s;
  r.terms.erase(r.terms.begin() + static_cast<long>(f) - 1, r.terms.begin() + static_cast<long>(f) + 1);
  return r;
}

flat::VarSet boundary_set(const Ctx& g, std::size_t n, Sign e) {
  const PsDerivation der = derive_ps(g);
  if (!der.ok) throw flat::malformed("boundary set of a non-ps context");
  flat::VarSet v(g.size(), false);
  v[0] = true;
  for (const auto& st : der.steps) {
    if (n < st.dim_a) continue;
    if (n == st.dim_a) {
      if (e == Sign::Plus) {
        v[st.x] = false;
        v[st.y] = true;
      }
      continue;
    }
    v[st.y] = true;
    v[st.f] = true;
  }
  return v;
}

bool op_allowed(OpSet o, const Ctx& g, const flat::VarSet& u, const flat::VarSet& v) {
  if (o == OpSet::Groupoidal) return true;
  const flat::VarSet full = flat::full_set(g.size());
  if (u == full && v == full) return true;
  const std::size_t d = flat::dim(g);
  if (d == 0) return false;
  return u == boundary_set(g, d - 1, Sign::Minus) && v == boundary_set(g, d - 1, Sign::Plus);
}

namespace {

void words_rec(DyckWord& cur, std::size_t ups, std::size_t height, std::size_t max_ups,
               std::vector<DyckWord>& out) {
  if (height == 0) out.push_back(cur);
  if (ups < max_ups) {
    cur.moves.push_back(Move::Up);
    words_rec(cur, ups + 1, height + 1, max_ups, out);
    cur.moves.pop_back();
  }
  if (height > 0) {
    cur.moves.push_back(Move::Down);
    words_rec(cur, ups, height - 1, max_ups, out);
    cur.moves.pop_back();
  }
}

}  // namespace

std::vector<DyckWord> all_words(std::size_t max_ups) {
  std::vector<DyckWord> out;
  DyckWord cur;
  words_rec(cur, 0, 0, max_ups, out);
  return out;
}

}  // namespace catt::ps
