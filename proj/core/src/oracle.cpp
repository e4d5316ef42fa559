#include "catt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "catt/core.hpp"
#include "catt/pasting.hpp"
#include "catt/standard.hpp"
#include "catt/tree.hpp"

namespace catt::oracle {

using flat::Sub;
using flat::Term;
using flat::Type;
using tree::Tree;

std::string show(Rule r) {
  switch (r) {
    case Rule::DiscRemoval: return "dr";
    case Rule::EndoCoherence: return "ecr'";
    case Rule::Pruning: return "prune'";
    case Rule::Insertion: return "insert'";
  }
  return "?";
}

std::string show(const Step& s) {
  std::string where;
  for (const auto& w : s.where) where += (where.empty() ? "" : " > ") + w;
  return show(s.rule) + (where.empty() ? "" : " at " + where) + ": " + flat::show(s.result);
}

namespace {

using Route = std::vector<std::string>;
// Visitors return false to stop the enumeration.
using TermVisit = std::function<bool(const Term&, Rule, bool, Route)>;
using TypeVisit = std::function<bool(const Type&, Rule, bool, Route)>;

Type flat_standard_type(const Tree& t, std::size_t n) {
  static std::mutex mu;
  static std::unordered_map<std::string, Type> cache;
  const std::string key = tree::show(t) + "/" + std::to_string(n);
  {
    std::lock_guard<std::mutex> g(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Type a = core::flatten_core(core::standard_type(t, n), t);
  std::lock_guard<std::mutex> g(mu);
  cache.emplace(key, a);
  return a;
}

// The tree of a coherence that is an identity or a non-unary standard composite.
std::optional<Tree> insertable(const Term& e) {
  if (e.is_var()) return std::nullopt;
  Tree t;
  if (!tree::from_ctx(e.ctx(), t)) return std::nullopt;
  if (flat::is_identity(e)) return t;
  if (tree::is_linear(t)) return std::nullopt;
  if (e.type() == flat_standard_type(t, tree::height(t))) return t;
  return std::nullopt;
}

bool head_rules(const Term& t, RuleSet r, const TermVisit& visit) {
  const Type& a = t.type();
  const Sub& s = t.sub();
  const bool identity = flat::is_identity(t);
  const bool unary = flat::is_unary_composite(t);

  if (unary && a.dim() > 0) {
    if (!visit(s.terms.back(), Rule::DiscRemoval, false, {})) return false;
  }
  if (!identity && !a.is_star() && a.src() == a.tgt()) {
    const Term id = flat::identity(flat::substitute(a.base(), s), flat::substitute(a.src(), s));
    if (!visit(id, Rule::EndoCoherence, false, {})) return false;
  }
  if (r == RuleSet::SuPrime && !identity) {
    const ps::PsDerivation d = ps::derive_ps(t.ctx());
    if (d.ok) {
      for (const ps::Peak p : ps::peaks(d.word)) {
        if (!flat::is_identity(s.terms.at(ps::peak_level(d.word, p)))) continue;
        const ps::Pruned pr = ps::prune(d.word, p);
        const Term out = Term::coh(ps::dyck_realise(pr.word).ctx, flat::substitute(a, pr.pi),
                                   ps::prune_sub(s, d.word, p));
        if (!visit(out, Rule::Pruning, false, {})) return false;
      }
    }
  }
  if (r == RuleSet::SuaPrime && !identity && !unary) {
    Tree st;
    if (tree::from_ctx(t.ctx(), st)) {
      const tree::Labelled<Term> l = tree::label_from_sub(st, s);
      for (const auto& br : tree::branches(st)) {
        const Term& e = tree::at(l, tree::branch_path(st, br));
        const auto inner = insertable(e);
        if (!inner || !tree::insertion_point(st, br, *inner)) continue;
        const Tree out_tree = tree::insert_tree(st, br, *inner);
        const Sub kappa = core::flatten_core(tree::exterior_label(st, br, *inner), core::Scope::tree(out_tree));
        const tree::Labelled<Term> m = tree::label_from_sub(*inner, e.sub());
        const Term out = Term::coh(tree::to_ctx(out_tree), flat::substitute(a, kappa),
                                   tree::label_to_sub(tree::insert_label(l, br, m)));
        if (!visit(out, Rule::Insertion, false, {})) return false;
      }
    }
  }
  return true;
}

Route prefixed(std::string head, Route rest) {
  rest.insert(rest.begin(), std::move(head));
  return rest;
}

bool enumerate(const Type& a, RuleSet r, const TypeVisit& visit);

bool enumerate(const Term& t, RuleSet r, const TermVisit& visit) {
  if (t.is_var()) return true;
  if (!head_rules(t, r, visit)) return false;
  const bool go_on = enumerate(t.type(), r, [&](const Type& b, Rule rule, bool, Route where) {
    return visit(Term::coh(t.ctx(), b, t.sub()), rule, true, prefixed("cell", std::move(where)));
  });
  if (!go_on) return false;
  const Sub& s = t.sub();
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    const bool more = enumerate(s.terms[i], r, [&](const Term& u, Rule rule, bool cell, Route where) {
      Sub out = s;
      out.terms[i] = u;
      return visit(Term::coh(t.ctx(), t.type(), std::move(out)), rule, cell,
                   prefixed("arg " + std::to_string(i), std::move(where)));
    });
    if (!more) return false;
  }
  return true;
}

bool enumerate(const Type& a, RuleSet r, const TypeVisit& visit) {
  if (a.is_star()) return true;
  const bool src = enumerate(a.src(), r, [&](const Term& u, Rule rule, bool cell, Route where) {
    return visit(Type::arrow(u, a.base(), a.tgt()), rule, cell, prefixed("src", std::move(where)));
  });
  if (!src) return false;
  const bool base = enumerate(a.base(), r, [&](const Type& b, Rule rule, bool cell, Route where) {
    return visit(Type::arrow(a.src(), b, a.tgt()), rule, cell, prefixed("base", std::move(where)));
  });
  if (!base) return false;
  return enumerate(a.tgt(), r, [&](const Term& u, Rule rule, bool cell, Route where) {
    return visit(Type::arrow(a.src(), a.base(), u), rule, cell, prefixed("tgt", std::move(where)));
  });
}

std::optional<Step> first_step(const Term& t, RuleSet r) {
  std::optional<Step> out;
  enumerate(t, r, [&](const Term& u, Rule rule, bool cell, Route where) {
    out = Step{u, rule, cell, std::move(where)};
    return false;
  });
  return out;
}

std::optional<TypeStep> first_step(const Type& a, RuleSet r) {
  std::optional<TypeStep> out;
  enumerate(a, r, [&](const Type& b, Rule rule, bool cell, Route where) {
    out = TypeStep{b, rule, cell, std::move(where)};
    return false;
  });
  return out;
}

}  // namespace

std::vector<Step> step(const Term& t, RuleSet r) {
  std::vector<Step> out;
  enumerate(t, r, [&](const Term& u, Rule rule, bool cell, Route where) {
    out.push_back(Step{u, rule, cell, std::move(where)});
    return true;
  });
  return out;
}

std::vector<TypeStep> step(const Type& a, RuleSet r) {
  std::vector<TypeStep> out;
  enumerate(a, r, [&](const Type& b, Rule rule, bool cell, Route where) {
    out.push_back(TypeStep{b, rule, cell, std::move(where)});
    return true;
  });
  return out;
}

Complexity& Complexity::operator+=(const Complexity& o) {
  if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

namespace {

std::size_t top(const Complexity& c) {
  std::size_t n = c.coeffs.size();
  while (n > 0 && c.coeffs[n - 1] == 0) --n;
  return n;
}

}  // namespace

bool operator==(const Complexity& a, const Complexity& b) {
  const std::size_t n = top(a);
  if (n != top(b)) return false;
  return std::equal(a.coeffs.begin(), a.coeffs.begin() + static_cast<long>(n), b.coeffs.begin());
}

bool operator<(const Complexity& a, const Complexity& b) {
  const std::size_t na = top(a);
  const std::size_t nb = top(b);
  if (na != nb) return na < nb;
  for (std::size_t i = na; i-- > 0;)
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  return false;
}

std::string show(const Complexity& c) {
  const std::size_t n = top(c);
  if (n == 0) return "0";
  std::string out;
  for (std::size_t i = n; i-- > 0;) {
    if (c.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (i == 0 ? std::to_string(c.coeffs[i]) : "w^" + std::to_string(i) + "*" + std::to_string(c.coeffs[i]));
  }
  return out;
}

Complexity complexity(const Term& t) {
  Complexity c;
  if (t.is_var()) return c;
  const std::size_t d = t.type().dim();
  c.coeffs.assign(d + 1, 0);
  c.coeffs[d] = flat::is_identity(t) ? 1 : 2;
  c += complexity(t.sub());
  return c;
}

Complexity complexity(const Type& a) {
  Complexity c;
  if (a.is_star()) return c;
  c += complexity(a.src());
  c += complexity(a.base());
  c += complexity(a.tgt());
  return c;
}

Complexity complexity(const Sub& s) {
  Complexity c = complexity(s.ty);
  for (const auto& t : s.terms) c += complexity(t);
  return c;
}

Term normalise(const Term& t, RuleSet r) {
  Term cur = t;
  for (std::size_t i = 0; i < kMaxSteps; ++i) {
    auto s = first_step(cur, r);
    if (!s) return cur;
    cur = s->result;
  }
  throw not_terminating("no normal form within " + std::to_string(kMaxSteps) + " steps");
}

Type normalise(const Type& a, RuleSet r) {
  Type cur = a;
  for (std::size_t i = 0; i < kMaxSteps; ++i) {
    auto s = first_step(cur, r);
    if (!s) return cur;
    cur = s->result;
  }
  throw not_terminating("no normal form within " + std::to_string(kMaxSteps) + " steps");
}

Term normalise_random(const Term& t, RuleSet r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Term cur = t;
  for (std::size_t i = 0; i < kMaxSteps; ++i) {
    const auto steps = step(cur, r);
    if (steps.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
    cur = steps[pick(rng)].result;
  }
  throw not_terminating("no normal form within " + std::to_string(kMaxSteps) + " steps");
}

std::vector<Step> normalise_trace(const Term& t, RuleSet r) {
  std::vector<Step> out;
  Term cur = t;
  for (std::size_t i = 0; i < kMaxSteps; ++i) {
    auto s = first_step(cur, r);
    if (!s) return out;
    cur = s->result;
    out.push_back(std::move(*s));
  }
  throw not_terminating("no normal form within " + std::to_string(kMaxSteps) + " steps");
}

namespace {

std::unordered_set<std::string> reach(const Term& t, RuleSet r, std::size_t depth) {
  std::unordered_set<std::string> seen{flat::show(t)};
  std::vector<Term> frontier{t};
  for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Term> next;
    for (const auto& u : frontier)
      for (auto& s : step(u, r))
        if (seen.insert(flat::show(s.result)).second) next.push_back(std::move(s.result));
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

ConfluenceReport local_confluence_sample(const Term& t, RuleSet r, std::size_t depth) {
  ConfluenceReport rep;
  const auto steps = step(t, r);
  std::vector<std::unordered_set<std::string>> reaches;
  reaches.reserve(steps.size());
  for (const auto& s : steps) reaches.push_back(reach(s.result, r, depth));
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      if (steps[i].result == steps[j].result) continue;
      ++rep.pairs;
      const auto& a = reaches[i];
      const auto& b = reaches[j];
      const bool joined = std::any_of(a.begin(), a.end(), [&](const std::string& k) { return b.count(k) > 0; });
      if (!joined) rep.unjoined.emplace_back(steps[i].result, steps[j].result);
    }
  return rep;
}

namespace {

bool equal_types(const Type& a, const Type& b, std::optional<RuleSet> r) {
  if (a == b) return true;
  if (!r) return false;
  return normalise(a, *r) == normalise(b, *r);
}

bool type_ok(const flat::Ctx& g, const Type& a, std::optional<RuleSet> r);

}  // namespace

std::optional<Type> infer_type(const flat::Ctx& g, const Term& t, std::optional<RuleSet> r) {
  if (t.is_var()) {
    if (t.index() >= g.size()) return std::nullopt;
    return flat::var_type(g, t.index());
  }
  const flat::Ctx& d = t.ctx();
  const Type& a = t.type();
  const Sub& s = t.sub();
  if (!ps::check_ps(d) || !check_ctx(d, r) || a.is_star() || !type_ok(d, a, r)) return std::nullopt;
  if (!ps::op_allowed(ps::OpSet::Regular, d, flat::support(d, a.src()), flat::support(d, a.tgt())))
    return std::nullopt;
  if (!s.ty.is_star() || s.terms.size() != d.size()) return std::nullopt;
  Sub prefix;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto ti = infer_type(g, s.terms[i], r);
    if (!ti || !equal_types(*ti, flat::substitute(d[i], prefix), r)) return std::nullopt;
    prefix.terms.push_back(s.terms[i]);
  }
  return flat::substitute(a, s);
}

namespace {

bool type_ok(const flat::Ctx& g, const Type& a, std::optional<RuleSet> r) {
  if (a.is_star()) return true;
  if (!type_ok(g, a.base(), r)) return false;
  const auto s = infer_type(g, a.src(), r);
  const auto t = infer_type(g, a.tgt(), r);
  return s && t && equal_types(*s, a.base(), r) && equal_types(*t, a.base(), r);
}

}  // namespace

bool check_ctx(const flat::Ctx& g, std::optional<RuleSet> r) {
  flat::Ctx prefix;
  for (const auto& a : g) {
    if (!type_ok(prefix, a, r)) return false;
    prefix.push_back(a);
  }
  return true;
}

}  // namespace catt::oracle
