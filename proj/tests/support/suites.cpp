#include "support/suites.hpp"

#include <algorithm>
#include <functional>

#include "catt/core.hpp"
#include "catt/nbe.hpp"
#include "catt/oracle.hpp"
#include "catt/pasting.hpp"
#include "catt/standard.hpp"
#include "catt/tree.hpp"

namespace catt::testing {

using flat::Sub;
using flat::Term;
using flat::Type;
using ps::Sign;
using tree::Tree;

void Tally::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (failed++ == 0) first_failure = what;
}

Tally& Tally::operator+=(const Tally& o) {
  if (failed == 0 && o.failed > 0) first_failure = o.first_failure;
  checked += o.checked;
  failed += o.failed;
  return *this;
}

std::string describe(const Tally& t) {
  std::string r = std::to_string(t.checked) + " checked, " + std::to_string(t.failed) + " failed";
  if (t.failed > 0) r += "; first: " + t.first_failure;
  return r;
}

namespace {

oracle::RuleSet rules_for(bool sua) { return sua ? oracle::RuleSet::SuaPrime : oracle::RuleSet::SuPrime; }

Term nbe_normal_form(const Tree& t, const Term& tm, const nbe::EvalConfig& cfg) {
  const core::Scope sc = core::Scope::tree(t);
  return nbe::flatten(nbe::eval(core::from_flat(tm, sc), nbe::id_env(t), cfg), sc);
}

}  // namespace

Tally nbe_oracle_agreement(const std::vector<SuiteEntry>& suite, bool sua) {
  Tally r;
  const auto cfg = sua ? nbe::EvalConfig::sua() : nbe::EvalConfig::su();
  for (const auto& e : suite) {
    const Term& tm = e.typed.term;
    const auto ty = oracle::infer_type(tree::to_ctx(e.ctx), tm, std::nullopt);
    if (!ty || !(*ty == e.typed.type)) {
      r.record(false, flat::show(tm) + " is ill-typed");
      continue;
    }
    try {
      const Term a = nbe_normal_form(e.ctx, tm, cfg);
      const Term b = oracle::normalise(tm, rules_for(sua));
      r.record(a == b, flat::show(tm) + ": nbe " + flat::show(a) + ", oracle " + flat::show(b));
    } catch (const std::exception& ex) {
      r.record(false, flat::show(tm) + ": " + ex.what());
    }
  }
  return r;
}

Tally oracle_seed_invariance(const std::vector<SuiteEntry>& suite, std::size_t seeds) {
  Tally r;
  for (bool sua : {false, true})
    for (const auto& e : suite) {
      const Term nf = oracle::normalise(e.typed.term, rules_for(sua));
      for (std::uint64_t s = 1; s <= seeds; ++s) {
        const Term other = oracle::normalise_random(e.typed.term, rules_for(sua), s * 7919 + e.typed.term.is_var());
        r.record(other == nf, flat::show(e.typed.term) + " with seed " + std::to_string(s));
      }
    }
  return r;
}

Tally complexity_decrease(const std::vector<SuiteEntry>& suite) {
  Tally r;
  for (bool sua : {false, true})
    for (const auto& e : suite) {
      Term t = e.typed.term;
      for (std::size_t guard = 0; guard < oracle::kMaxSteps; ++guard) {
        const auto steps = oracle::step(t, rules_for(sua));
        if (steps.empty()) break;
        const oracle::Complexity before = oracle::complexity(t);
        for (const auto& s : steps) {
          if (s.cell) continue;
          const oracle::Complexity after = oracle::complexity(s.result);
          r.record(after < before, flat::show(t) + " -> " + flat::show(s.result) + " (" + oracle::show(before) + " to " +
                                       oracle::show(after) + ")");
        }
        t = steps.front().result;
      }
    }
  return r;
}

Tally disc_trivialisation(std::uint64_t seed, std::size_t per_disc) {
  Tally r;
  Rng rng(seed);
  for (std::size_t n : {1, 2}) {
    const Tree d = tree::disc_tree(n);
    const flat::Ctx g = tree::to_ctx(d);
    for (std::size_t i = 0; i < per_disc; ++i) {
      const Typed x = random_term(rng, d, 1 + i % 3, n + 1);
      if (x.term.is_var() || flat::support(g, x.term) != flat::full_set(g.size())) continue;
      try {
        const core::Scope sc = core::Scope::tree(d);
        const nbe::NfTerm nf = nbe::eval(core::from_flat(x.term, sc), nbe::id_env(d), nbe::EvalConfig::su());
        r.record(nbe::is_iterated_identity(nf), flat::show(x.term) + " normalises to " + nbe::show(nf));
      } catch (const std::exception& ex) {
        r.record(false, flat::show(x.term) + ": " + ex.what());
      }
    }
  }
  return r;
}

Tally substitution_laws(std::uint64_t seed) {
  Tally r;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 6);
  for (int i = 0; i < 300; ++i) {
    const std::size_t a = len(rng), b = len(rng), c = len(rng), d = len(rng);
    const Sub s = random_scoped_sub(rng, a, b, 2);
    const Sub t = random_scoped_sub(rng, b, c, 2);
    const Sub u = random_scoped_sub(rng, c, d, 2);
    r.record(flat::compose(flat::compose(s, t), u) == flat::compose(s, flat::compose(t, u)), "associativity");
    r.record(flat::compose(flat::identity_sub(a), s) == s, "left unit");
    r.record(flat::compose(s, flat::identity_sub(b)) == s, "right unit");
    const Term x = random_scoped_term(rng, a, 3);
    r.record(flat::substitute(flat::substitute(x, s), t) == flat::substitute(x, flat::compose(s, t)), "action on terms");
    r.record(flat::substitute(x, flat::identity_sub(a)) == x, "identity action");
  }
  return r;
}

Tally disc_laws(std::uint64_t seed) {
  Tally r;
  for (std::size_t n = 0; n <= 6; ++n) {
    r.record(flat::suspend(flat::disc(n)) == flat::disc(n + 1), "suspended disc " + std::to_string(n));
    r.record(flat::suspend(flat::sphere(n)) == flat::sphere(n + 1), "suspended sphere " + std::to_string(n));
  }
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_tree(rng, 9);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, tree::height(t) + 1)(rng);
    const Type a = random_type(rng, t, n);
    r.record(flat::substitute(flat::sphere_type(n), flat::sub_from_disc(a)) == a, "sphere type over " + flat::show(a));
  }
  return r;
}

Tally prune_commutation() {
  Tally r;
  for (const auto& d : ps::all_words(5)) {
    const ps::Realisation full = ps::dyck_realise(d);
    for (auto p : ps::peaks(d)) {
      const ps::Pruned pr = ps::prune(d, p);
      const ps::Realisation small = ps::dyck_realise(pr.word);
      const std::string what = ps::show(d) + " at peak " + std::to_string(p);
      r.record(flat::substitute(full.ty, pr.pi) == small.ty, what + " on the type");
      r.record(flat::substitute(full.tm, pr.pi) == small.tm, what + " on the term");
    }
  }
  return r;
}

namespace {

flat::Sub paths_sub(const tree::Labelled<tree::Path>& l, const Tree& tgt) { return tree::paths_to_sub(l, tgt); }

tree::Labelled<core::Term> as_terms(const tree::Labelled<tree::Path>& l) {
  return tree::map_labelled<core::Term>(l, [](const tree::Path& p) { return core::path(p); });
}

struct InsertionCase {
  Tree s;
  tree::Branch p;
  Tree t;
};

std::vector<InsertionCase> insertion_cases(std::size_t max_nodes) {
  std::vector<InsertionCase> r;
  const auto trees = tree::all_trees(max_nodes);
  for (const auto& s : trees)
    for (const auto& p : tree::branches(s))
      for (const auto& t : trees)
        if (tree::insertion_point(s, p, t)) r.push_back({s, p, t});
  return r;
}

// Counts the well-typed variable-to-variable substitutions ⌊T⌋ → ⌊T⌋ that send
// each level in `fixed` to itself, stopping once more than `limit` are found.
std::size_t count_fixing_endomorphisms(const flat::Ctx& g, const std::vector<bool>& fixed, std::size_t limit) {
  const std::size_t n = g.size();
  std::vector<Term> f;
  std::size_t found = 0;
  std::function<void()> go = [&] {
    if (found > limit) return;
    const std::size_t i = f.size();
    if (i == n) {
      ++found;
      return;
    }
    const Type want = flat::substitute(g[i], Sub{Type::star(), f});
    for (std::size_t j = 0; j < n; ++j) {
      if (fixed[i] && j != i) continue;
      if (!(flat::var_type(g, flat::index_of(n, j)) == want)) continue;
      f.push_back(Term::var(flat::index_of(n, j)));
      go();
      f.pop_back();
    }
  };
  go();
  return found;
}

std::string show_case(const InsertionCase& c) {
  std::string b;
  for (auto i : c.p) b += std::to_string(i);
  return tree::show(c.s) + " at [" + b + "] with " + tree::show(c.t);
}

}  // namespace

Tally labelling_laws(std::uint64_t seed) {
  Tally r;
  Rng rng(seed);
  for (int i = 0; i < 300; ++i) {
    const Tree t = random_tree(rng, 9);
    const std::size_t n = tree::to_ctx(t).size();
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    Sub s = random_scoped_sub(rng, n, m, 2);
    s.ty = random_scoped_type(rng, m, 1);
    const auto l = tree::label_from_sub(t, s);
    r.record(tree::label_to_sub(l, s.ty) == s, "round trip on " + tree::show(t));
    r.record(tree::shape(l) == t, "shape of " + tree::show(t));
    const Sub u = random_scoped_sub(rng, m, 4, 2);
    const auto lu = tree::map_labelled<Term>(l, [&](const Term& x) { return flat::substitute(x, u); });
    r.record(tree::label_to_sub(lu, flat::substitute(s.ty, u)) == flat::compose(s, u), "homomorphism on " + tree::show(t));
    const auto ids = tree::map_labelled<Term>(tree::identity_paths(t), [&](const tree::Path& p) { return tree::path_var(t, p); });
    r.record(tree::label_to_sub(ids) == flat::identity_sub(n), "identity labelling on " + tree::show(t));
  }
  return r;
}

Tally insertion_laws() {
  Tally r;
  for (const auto& c : insertion_cases(6)) {
    const std::string what = show_case(c);
    const Tree st = tree::insert_tree(c.s, c.p, c.t);
    const core::Scope sc = core::Scope::tree(st);
    const auto iota = tree::interior_label(c.s, c.p, c.t);
    const core::Label kappa = tree::exterior_label(c.s, c.p, c.t);
    const std::size_t lh = tree::leaf_height(c.s, c.p);

    const Term at_branch = core::flatten_core(tree::at(kappa.tree, tree::branch_path(c.s, c.p)), sc);
    const Term standard = flat::substitute(core::flatten_core(core::standard_coh(c.t, lh), c.t), paths_sub(iota, st));
    r.record(at_branch == standard, what + ": exterior labelling at the branch");

    const auto back = tree::insert_label(kappa.tree, c.p, as_terms(iota));
    r.record(tree::max_equal(back, core::identity_label(st).tree, std::equal_to<>{}), what + ": exterior inserted with interior");

    if (c.t == tree::disc_tree(lh)) {
      r.record(st == c.s, what + ": inserted disc");
      // Away from the branch κ is the identity; at it, the unary composite on that variable.
      const tree::Path pbar = tree::branch_path(c.s, c.p);
      for (const auto& q : tree::max_paths(c.s)) {
        const Term k = core::flatten_core(tree::at(kappa.tree, q), sc);
        if (q != pbar) {
          r.record(k == tree::path_var(st, q), what + ": disc exterior");
          continue;
        }
        r.record(flat::is_unary_composite(k) && k.sub().terms.back() == tree::path_var(st, q), what + ": disc exterior at the branch");
      }
    }
    if (tree::is_linear(c.s)) {
      r.record(st == c.t, what + ": insertion into a disc");
      r.record(iota == tree::identity_paths(c.t), what + ": disc interior");
    }
  }
  return r;
}

Tally pushout_factorisation(std::uint64_t seed) {
  Tally r;
  Rng rng(seed);
  for (const auto& c : insertion_cases(5)) {
    const std::string what = show_case(c);
    const Tree st = tree::insert_tree(c.s, c.p, c.t);
    const core::Scope sc = core::Scope::tree(st);
    const auto iota = tree::interior_label(c.s, c.p, c.t);
    const core::Label kappa = tree::exterior_label(c.s, c.p, c.t);
    const tree::Path pbar = tree::branch_path(c.s, c.p);

    // Every maximal position of S ≪ T is reached by ι or by a variable entry of κ,
    // so a labelling of S ≪ T is determined by its composites with both.
    std::vector<tree::Path> reached;
    for (const auto& q : tree::max_paths(c.t)) reached.push_back(tree::at(iota, q));
    for (const auto& q : tree::max_paths(c.s)) {
      const core::Term& k = tree::at(kappa.tree, q);
      if (k.kind() == core::TermKind::Var) reached.push_back(std::get<tree::Path>(k->pos));
    }
    for (const auto& q : tree::max_paths(st))
      r.record(std::find(reached.begin(), reached.end(), q) != reached.end(), what + ": joint cover");

    // Only the identity factors the universal cocone (κ, ι) through itself.
    const flat::Ctx g = tree::to_ctx(st);
    std::vector<bool> fixed(g.size(), false);
    for (const auto& q : reached) fixed[tree::path_level(st, q)] = true;
    r.record(count_fixing_endomorphisms(g, fixed, 1) == 1, what + ": unique factorisation");

    // The factorisation L ≪ M of a cocone (L, M) composes back to both legs.
    const std::size_t codomain = 5;
    const auto l = tree::label_from_sub(c.s, random_scoped_sub(rng, tree::to_ctx(c.s).size(), codomain, 1));
    const auto m = tree::label_from_sub(c.t, random_scoped_sub(rng, tree::to_ctx(c.t).size(), codomain, 1));
    const auto lm = tree::insert_label(l, c.p, m);
    const Sub f = tree::label_to_sub(lm);
    r.record(tree::map_labelled<Term>(iota, [&](const tree::Path& q) { return tree::at(lm, q); }) == m, what + ": interior leg");
    for (const auto& q : tree::max_paths(c.s)) {
      if (q == pbar) continue;
      const Term k = flat::substitute(core::flatten_core(tree::at(kappa.tree, q), sc), f);
      r.record(k == tree::at(l, q), what + ": exterior leg");
    }
  }
  return r;
}

Tally boundary_agreement() {
  Tally r;
  for (const auto& t : tree::all_trees(6)) {
    const flat::Ctx g = tree::to_ctx(t);
    for (std::size_t n = 0; n <= tree::height(t) + 1; ++n)
      for (Sign e : {Sign::Minus, Sign::Plus})
        r.record(tree::boundary_set(t, n, e) == ps::boundary_set(g, n, e),
                 tree::show(t) + " in dimension " + std::to_string(n));
  }
  return r;
}

}  // namespace catt::testing
