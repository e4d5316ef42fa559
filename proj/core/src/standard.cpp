#include "catt/standard.hpp"

#include <mutex>
#include <unordered_map>

namespace catt::core {

namespace {

struct TypeCache {
  std::mutex mu;
  std::unordered_map<std::string, Type> types;
};

TypeCache& cache() {
  static TypeCache c;
  return c;
}

Type build_standard_type(const Tree& t, std::size_t n) {
  if (n == 0) return Type::star();
  const std::size_t k = n - 1;
  const Tree b = tree::boundary(t, k);
  const Term tm = standard_term(b, k);
  const Term src = Term::app_label(tm, paths_label(tree::boundary_label(t, k, ps::Sign::Minus)));
  const Term tgt = Term::app_label(tm, paths_label(tree::boundary_label(t, k, ps::Sign::Plus)));
  return Type::arrow(src, standard_type(t, k), tgt);
}

}  // namespace

Type standard_type(const Tree& t, std::size_t n) {
  const std::string key = tree::show(t) + "/" + std::to_string(n);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> g(c.mu);
    if (auto it = c.types.find(key); it != c.types.end()) return it->second;
  }
  Type r = build_standard_type(t, n);
  std::lock_guard<std::mutex> g(c.mu);
  c.types.emplace(key, r);
  return r;
}

Term standard_coh(const Tree& t, std::size_t n) { return Term::coh(t, standard_type(t, n)); }

Term standard_term(const Tree& t, std::size_t n) {
  if (n == 0 && t.children.empty()) return path({0});
  if (n != 0 && t.children.size() == 1) {
    const Term inner = standard_term(t.children[0], n - 1);
    if (inner.kind() == TermKind::Var) {
      Path p = std::get<Path>(inner->pos);
      p.insert(p.begin(), 0);
      return path(std::move(p));
    }
    return Term::inc(0, 1, Term::susp(inner));
  }
  return standard_coh(t, n);
}

Label label_from_disc(const Type& a, const Term& t) {
  std::vector<std::pair<Term, Term>> highest_first;
  Type cur = a;
  while (!cur.is_star()) {
    if (cur.kind() != TypeKind::Arrow) throw flat::malformed("disc labelling from a type that is not an arrow");
    highest_first.emplace_back(*cur->src, *cur->tgt);
    cur = cur->base;
  }
  const std::vector<std::pair<Term, Term>> lowest_first(highest_first.rbegin(), highest_first.rend());
  return Label{tree::disc_labelling(lowest_first, t), Type::star()};
}

}  // namespace catt::core

namespace catt::tree {

bool insertion_point(const Tree& s, const Branch& p, const Tree& t) {
  return valid_branch(s, p) && branch_height(p) <= trunk_height(t) && leaf_height(s, p) >= height(t);
}

namespace {

void require_point(const Tree& s, const Branch& p, const Tree& t) {
  if (!insertion_point(s, p, t)) throw flat::malformed("not an insertion point");
}

Tree insert_rec(const Tree& s, const Branch& p, std::size_t from, const Tree& t) {
  const std::size_t k = p[from];
  Tree r;
  r.children.assign(s.children.begin(), s.children.begin() + static_cast<long>(k));
  if (from + 1 == p.size()) {
    r.children.insert(r.children.end(), t.children.begin(), t.children.end());
  } else {
    r.children.push_back(insert_rec(s.children[k], p, from + 1, t.children.at(0)));
  }
  r.children.insert(r.children.end(), s.children.begin() + static_cast<long>(k) + 1, s.children.end());
  return r;
}

Labelled<Path> interior_rec(const Tree& s, const Branch& p, std::size_t from, const Tree& t) {
  const std::size_t k = p[from];
  if (from + 1 == p.size()) {
    return map_labelled<Path>(identity_paths(t), [k](const Path& q) {
      Path r = q;
      r[0] += k;
      return r;
    });
  }
  const Labelled<Path> inner = interior_rec(s.children[k], p, from + 1, t.children.at(0));
  Labelled<Path> r;
  r.elems = {Path{k}, Path{k + 1}};
  r.branches.push_back(map_labelled<Path>(inner, [k](const Path& q) {
    Path x = q;
    x.insert(x.begin(), k);
    return x;
  }));
  return r;
}

core::Term shift_path(const Path& q, std::size_t k) {
  Path r = q;
  r[0] += k;
  return core::path(std::move(r));
}

Labelled<core::Term> exterior_rec(const Tree& s, const Branch& p, std::size_t from, const Tree& t) {
  const std::size_t k = p[from];
  const std::size_t n = s.children.size();
  Labelled<core::Term> r;
  if (from + 1 == p.size()) {
    const std::size_t m = t.children.size();
    for (std::size_t j = 0; j <= n; ++j) r.elems.push_back(core::path({j <= k ? j : j + m - 1}));
    const std::size_t lh = height(s.children[k]) + 1;
    const core::Label disc = core::label_from_disc(core::standard_type(t, lh), core::standard_coh(t, lh));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) {
        r.branches.push_back(map_labelled<core::Term>(disc.tree.branches.at(0), [&](const core::Term& e) {
          if (e.kind() == core::TermKind::Var) return shift_path(std::get<Path>(e->pos), k);
          return core::Term::inc(k, k + m, e);
        }));
        continue;
      }
      const std::size_t target = i < k ? i : i + m - 1;
      r.branches.push_back(map_labelled<core::Term>(identity_paths(s.children[i]), [target](const Path& q) {
        Path x = q;
        x.insert(x.begin(), target);
        return core::path(std::move(x));
      }));
    }
    return r;
  }
  for (std::size_t j = 0; j <= n; ++j) r.elems.push_back(core::path({j}));
  const Labelled<core::Term> inner = exterior_rec(s.children[k], p, from + 1, t.children.at(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      r.branches.push_back(map_labelled<core::Term>(inner, [k](const core::Term& e) {
        if (e.kind() == core::TermKind::Var) {
          Path x = std::get<Path>(e->pos);
          x.insert(x.begin(), k);
          return core::path(std::move(x));
        }
        return core::Term::inc(k, k + 1, core::Term::susp(e));
      }));
      continue;
    }
    r.branches.push_back(map_labelled<core::Term>(identity_paths(s.children[i]), [i](const Path& q) {
      Path x = q;
      x.insert(x.begin(), i);
      return core::path(std::move(x));
    }));
  }
  return r;
}

}  // namespace

Tree insert_tree(const Tree& s, const Branch& p, const Tree& t) {
  require_point(s, p, t);
  return insert_rec(s, p, 0, t);
}

Labelled<Path> interior_label(const Tree& s, const Branch& p, const Tree& t) {
  require_point(s, p, t);
  return interior_rec(s, p, 0, t);
}

core::Label exterior_label(const Tree& s, const Branch& p, const Tree& t) {
  require_point(s, p, t);
  return core::Label{exterior_rec(s, p, 0, t), core::Type::star()};
}

}  // namespace catt::tree
