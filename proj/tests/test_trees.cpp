#include <doctest.h>

#include "catt/core.hpp"
#include "catt/standard.hpp"
#include "catt/tree.hpp"
#include "support/gen.hpp"

using namespace catt;
using namespace catt::tree;
using namespace catt::testing;
using flat::Ctx;
using flat::Sub;
using flat::Term;
using flat::Type;
using ps::Sign;

namespace {

Term v(std::size_t i) { return Term::var(i); }
Type arr(Term s, Term t) { return Type::arrow(std::move(s), Type::star(), std::move(t)); }
Type arr(Term s, Type a, Term t) { return Type::arrow(std::move(s), std::move(a), std::move(t)); }

const Tree leaf{};
Tree node(std::vector<Tree> c) { return Tree{std::move(c)}; }
const Tree comp2 = node({leaf, leaf});
const Tree comp3 = node({leaf, leaf, leaf});

Tree iterated_susp(std::size_t n) { return disc_tree(n); }

std::vector<Tree> trees_upto(std::size_t nodes) { return all_trees(nodes); }

Sub identity_paths_sub(const Tree& t) { return paths_to_sub(identity_paths(t), t); }

flat::VarSet support_of_sub(const Ctx& g, const Sub& s) {
  flat::VarSet r(g.size(), false);
  for (const auto& t : s.terms) r = flat::set_union(r, flat::support(g, t));
  return r;
}

}  // namespace

TEST_CASE("realising trees as contexts") {
  CHECK(to_ctx(leaf) == flat::disc(0));
  // x, y, f : x → y, g : x → y, α : f → g, z, h : y → z, w, k : z → w
  const Ctx fig = {Type::star(), Type::star(),   arr(v(1), v(0)), arr(v(2), v(1)), arr(v(1), arr(v(3), v(2)), v(0)),
                   Type::star(), arr(v(4), v(0)), Type::star(),   arr(v(2), v(0))};
  CHECK(to_ctx(node({node({leaf}), leaf, leaf})) == fig);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(to_ctx(iterated_susp(n)) == flat::disc(n));

  for (const auto& t : trees_upto(6)) {
    const Ctx g = to_ctx(t);
    CHECK(ps::check_ps(g));
    CHECK(flat::dim(g) == height(t));
    CHECK(to_ctx(suspend(t)) == flat::suspend(g));
    CHECK(from_word(to_word(t)) == t);
    Tree back;
    REQUIRE(from_ctx(g, back));
    CHECK(back == t);
  }
  for (const auto& a : trees_upto(4))
    for (const auto& b : trees_upto(4)) CHECK(to_ctx(concat(a, b)) == wedge(to_ctx(a), to_ctx(b)).ctx);
}

TEST_CASE("wedge sums") {
  const Ctx d0 = flat::disc(0);
  const Ctx d1 = flat::disc(1);
  for (const auto& t : trees_upto(5)) {
    const Ctx g = to_ctx(t);
    const Wedge w = wedge(g, d0);
    CHECK(w.ctx == g);
    CHECK(w.inl == flat::identity_sub(g));
    const Wedge u = wedge(d0, g);
    CHECK(u.ctx == g);
    CHECK(u.inr == flat::identity_sub(g));
    const Wedge x = wedge(g, d1);
    CHECK(from_wedge(x.inl, x.inr) == flat::identity_sub(x.ctx));
  }
  CHECK(wedge(d1, d1).ctx == to_ctx(comp2));
  CHECK_THROWS_AS(wedge(Ctx{}, d0), flat::malformed);

  for (const auto& a : trees_upto(4))
    for (const auto& b : trees_upto(4))
      for (const auto& c : trees_upto(4)) {
        const Ctx ga = to_ctx(a), gb = to_ctx(b), gc = to_ctx(c);
        const Wedge ab = wedge(ga, gb), bc = wedge(gb, gc);
        const Wedge left = wedge(ab.ctx, gc), right = wedge(ga, bc.ctx);
        REQUIRE(left.ctx == right.ctx);
        CHECK(flat::compose(ab.inl, left.inl) == right.inl);
        CHECK(flat::compose(ab.inr, left.inl) == flat::compose(bc.inl, right.inr));
        CHECK(left.inr == flat::compose(bc.inr, right.inr));
      }

  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Ctx g = to_ctx(random_tree(rng, 7));
    const Ctx d = to_ctx(random_tree(rng, 7));
    const Wedge w = wedge(g, d);
    const Sub sigma = random_scoped_sub(rng, g.size(), 3, 1);
    Sub tau = random_scoped_sub(rng, d.size(), 3, 1);
    tau.terms[0] = sigma.terms[snd_level(g)];
    const Sub glued = from_wedge(sigma, tau);
    CHECK(flat::compose(w.inl, glued) == sigma);
    CHECK(flat::compose(w.inr, glued) == tau);
    const Sub mu = random_scoped_sub(rng, 3, 2, 1);
    CHECK(flat::compose(glued, mu) == from_wedge(flat::compose(sigma, mu), flat::compose(tau, mu)));
  }
}

TEST_CASE("paths name variables") {
  CHECK(path_var(leaf, {0}) == v(0));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(path_var(iterated_susp(n), max_disc_path(n)) == v(0));
  CHECK(path_level(comp2, {0}) == 0);
  CHECK(path_level(comp2, {1}) == 1);
  CHECK(path_level(comp2, {2}) == 3);
  CHECK(path_var(comp2, {2}) == v(1));
  for (const auto& t : trees_upto(6)) {
    if (t == leaf) continue;
    const auto ps_ = paths(t);
    const Ctx g = to_ctx(t);
    REQUIRE(ps_.size() == g.size());
    for (std::size_t l = 0; l < ps_.size(); ++l) CHECK(path_level(t, ps_[l]) == l);
    const auto word = to_word(t);
    std::vector<std::size_t> peak_levels;
    for (auto p : ps::peaks(word)) peak_levels.push_back(ps::peak_level(word, p));
    std::vector<std::size_t> max_levels;
    for (const auto& p : max_paths(t)) max_levels.push_back(path_level(t, p));
    CHECK(max_levels == peak_levels);
  }
}

TEST_CASE("labellings realise substitutions") {
  const Type a = arr(v(1), v(0));
  CHECK(label_to_sub(Labelled<Term>::singleton(v(3)), a) == Sub{a, {v(3)}});

  // Γ = (x : ⋆), (f : x → x), (α : f ∗ f → f) and L = x{f∗f{α}f{id(f)}f}x{f}x
  const Term x = v(2), f = v(1), alpha = v(0);
  const Term ff = Term::coh(to_ctx(comp2), core::flatten_core(core::standard_type(comp2, 1), comp2),
                            Sub{Type::star(), {x, x, f, x, f}});
  const Term idf = flat::identity(arr(x, x), f);
  Labelled<Term> inner{{ff, f, f}, {Labelled<Term>::singleton(alpha), Labelled<Term>::singleton(idf)}};
  Labelled<Term> l{{x, x, x}, {inner, Labelled<Term>::singleton(f)}};
  CHECK(label_to_sub(l) == Sub{Type::star(), {x, x, ff, f, alpha, f, idf, x, f}});

  for (const auto& t : trees_upto(6)) {
    CHECK(identity_paths_sub(t) == flat::identity_sub(to_ctx(t)));
    CHECK(label_from_sub(t, flat::identity_sub(to_ctx(t))) == map_labelled<Term>(identity_paths(t), [&](const Path& p) {
            return path_var(t, p);
          }));
  }
  Labelled<Term> bad{{x, x}, {}};
  CHECK_THROWS_AS(label_to_sub(bad), flat::malformed);
}

TEST_CASE("tree boundaries") {
  for (const auto& t : trees_upto(6)) {
    CHECK(boundary(t, 0) == leaf);
    const std::size_t h = height(t);
    for (std::size_t n = h; n <= h + 2; ++n) {
      CHECK(boundary(t, n) == t);
      for (Sign e : {Sign::Minus, Sign::Plus}) CHECK(boundary_label(t, n, e) == identity_paths(t));
    }
    for (std::size_t m = 0; m <= h + 1; ++m)
      for (std::size_t n = 0; n <= m; ++n)
        for (Sign e : {Sign::Minus, Sign::Plus})
          for (Sign w : {Sign::Minus, Sign::Plus}) {
            if (n == m && e != w) continue;
            const Tree bm = boundary(t, m);
            REQUIRE(boundary(bm, n) == boundary(t, n));
            const Sub lhs = flat::compose(paths_to_sub(boundary_label(bm, n, e), bm), paths_to_sub(boundary_label(t, m, w), t));
            CHECK(lhs == paths_to_sub(boundary_label(t, n, e), t));
          }
    for (std::size_t n = 0; n <= h; ++n)
      for (Sign e : {Sign::Minus, Sign::Plus}) {
        const Sub d = paths_to_sub(boundary_label(t, n, e), t);
        CHECK(support_of_sub(to_ctx(t), d) == boundary_set(t, n, e));
      }
  }
}

TEST_CASE("standard types, coherences and terms") {
  for (const auto& t : trees_upto(5)) CHECK(core::standard_type(t, 0).is_star());
  const Type u = core::flatten_core(core::standard_type(comp2, 1), comp2);
  CHECK(u == arr(path_var(comp2, {0}), path_var(comp2, {2})));
  const Term c = core::flatten_core(core::standard_coh(comp2, 1), comp2);
  REQUIRE(!c.is_var());
  CHECK(c.ctx() == to_ctx(comp2));
  CHECK(c.sub() == flat::identity_sub(to_ctx(comp2)));

  for (const auto& t : trees_upto(5)) {
    const std::size_t h = height(t);
    const std::size_t len = to_ctx(t).size();
    for (std::size_t n = std::max<std::size_t>(h, 1); n <= h + 1; ++n) {
      const Term cn = core::flatten_core(core::standard_coh(t, n), t);
      CHECK(flat::suspend(cn, len) == core::flatten_core(core::standard_coh(suspend(t), n + 1), suspend(t)));
    }
    for (std::size_t m = 0; m <= h + 1; ++m)
      for (std::size_t n = 0; n <= m; ++n)
        for (Sign e : {Sign::Minus, Sign::Plus}) {
          const Tree bm = boundary(t, m);
          const Type lhs = flat::substitute(core::flatten_core(core::standard_type(bm, n), bm),
                                            paths_to_sub(boundary_label(t, m, e), t));
          CHECK(lhs == core::flatten_core(core::standard_type(t, n), t));
        }
    for (std::size_t n = 0; n < h; ++n)
      for (Sign e : {Sign::Minus, Sign::Plus}) {
        const Tree bn = boundary(t, n);
        const Term tm = flat::substitute(core::flatten_core(core::standard_term(bn, n), bn),
                                         paths_to_sub(boundary_label(t, n, e), t));
        CHECK(flat::support(to_ctx(t), tm) == boundary_set(t, n, e));
      }
  }
}

TEST_CASE("labellings from discs") {
  const core::Label l = core::label_from_disc(core::Type::star(), core::path({1}));
  CHECK(l.tree.elems.size() == 1);
  CHECK(l.tree.elems[0] == core::path({1}));
  CHECK(l.ty.is_star());

  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    const Tree t = random_tree(rng, 7);
    const Typed x = random_term(rng, t, 2, 3);
    const core::Scope sc = core::Scope::tree(t);
    const core::Label dl = core::label_from_disc(core::from_flat(x.type, sc), core::from_flat(x.term, sc));
    CHECK(core::flatten_core(dl, sc) == flat::sub_from_disc(x.type, x.term));
    const std::size_t n = x.type.dim();
    const Type un = core::flatten_core(core::standard_type(disc_tree(n), n), disc_tree(n));
    CHECK(un == flat::weaken(flat::sphere_type(n)));
    if (n == 0) continue;
    const Term unary = Term::coh(flat::disc(n), un, flat::sub_from_disc(x.type, x.term));
    CHECK(flat::canonical_type(to_ctx(t), unary) == x.type);
  }
}

TEST_CASE("inserted trees") {
  CHECK(insert_tree(comp2, {1}, comp2) == comp3);
  CHECK(insert_tree(comp2, {0}, comp2) == comp3);
  CHECK_THROWS_AS(insert_tree(comp2, {1}, node({node({leaf})})), flat::malformed);  // leaf height too small
  CHECK_THROWS_AS(insert_tree(node({node({leaf})}), {0, 0}, comp2), flat::malformed);  // trunk height too small

  std::size_t points = 0;
  for (const auto& s : trees_upto(6))
    for (const auto& p : branches(s))
      for (const auto& t : trees_upto(6)) {
        if (!insertion_point(s, p, t)) continue;
        ++points;
        if (is_linear(s)) {
          CHECK(insert_tree(s, p, t) == t);
          CHECK(interior_label(s, p, t) == identity_paths(t));
        }
      }
  CHECK(points > 100);

  for (const auto& s : trees_upto(6))
    for (const auto& p : branches(s)) {
      const Tree d = disc_tree(leaf_height(s, p));
      if (!insertion_point(s, p, d)) continue;
      CHECK(insert_tree(s, p, d) == s);
    }
}

TEST_CASE("interior and exterior labellings") {
  for (const auto& s : trees_upto(6))
    for (const auto& p : branches(s))
      for (const auto& t : trees_upto(6)) {
        if (!insertion_point(s, p, t)) continue;
        const Tree st = insert_tree(s, p, t);
        const core::Label k = exterior_label(s, p, t);
        CHECK(shape(k.tree) == s);
        const Sub ks = core::flatten_core(k, core::Scope::tree(st));
        CHECK(support_of_sub(to_ctx(st), ks) == flat::full_set(to_ctx(st).size()));
        const Labelled<Path> i = interior_label(s, p, t);
        CHECK(shape(i) == t);
      }
}

TEST_CASE("inserted labellings") {
  Rng rng(33);
  for (const auto& s : trees_upto(6))
    for (const auto& p : branches(s))
      for (const auto& t : trees_upto(6)) {
        if (!insertion_point(s, p, t)) continue;
        const Tree st = insert_tree(s, p, t);
        const Ctx g = to_ctx(s);
        const Labelled<Term> l = label_from_sub(s, random_scoped_sub(rng, g.size(), 4, 0));
        const Labelled<Term> m = label_from_sub(t, random_scoped_sub(rng, to_ctx(t).size(), 4, 0));
        const Labelled<Term> lm = insert_label(l, p, m);
        CHECK(shape(lm) == st);
        // ι • (L ≪ M) ≡ M
        const Labelled<Path> i = interior_label(s, p, t);
        CHECK(map_labelled<Term>(i, [&](const Path& q) { return at(lm, q); }) == m);
        if (is_linear(s)) CHECK(lm == m);
        if (t == disc_tree(leaf_height(s, p))) {
          const Labelled<Term> ml = map_labelled<Term>(i, [&](const Path& q) { return at(l, q); });
          CHECK(max_equal(insert_label(l, p, ml), l, std::equal_to<>{}));
        }
        // Branches sharing a maximal path behave identically.
        for (const auto& q : branches(s)) {
          if (q == p || branch_path(s, q) != branch_path(s, p) || !insertion_point(s, q, t)) continue;
          CHECK(insert_tree(s, q, t) == st);
          CHECK(max_equal(insert_label(l, q, m), lm, std::equal_to<>{}));
        }
      }
}
