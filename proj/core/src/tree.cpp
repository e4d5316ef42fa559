#include "catt/tree.hpp"

#include <algorithm>

namespace catt::tree {

using flat::Ctx;
using flat::Sub;
using flat::Term;
using flat::Type;

std::size_t height(const Tree& t) {
  std::size_t h = 0;
  for (const auto& c : t.children) h = std::max(h, 1 + height(c));
  return h;
}

std::size_t trunk_height(const Tree& t) {
  return t.children.size() == 1 ? 1 + trunk_height(t.children[0]) : 0;
}

bool is_linear(const Tree& t) { return height(t) == trunk_height(t); }

std::size_t node_count(const Tree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += node_count(c);
  return n;
}

Tree suspend(const Tree& t) { return Tree{{t}}; }

Tree disc_tree(std::size_t n) {
  Tree t;
  for (std::size_t i = 0; i < n; ++i) t = suspend(t);
  return t;
}

Tree concat(const Tree& a, const Tree& b) {
  Tree r = a;
  r.children.insert(r.children.end(), b.children.begin(), b.children.end());
  return r;
}

const Tree& subtree(const Tree& t, const Branch& q) {
  const Tree* cur = &t;
  for (auto i : q) {
    if (i >= cur->children.size()) throw flat::malformed("branch outside tree");
    cur = &cur->children[i];
  }
  return *cur;
}

std::string show(const Tree& t) {
  std::string r = "[";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) r += ",";
    r += show(t.children[i]);
  }
  return r + "]";
}

namespace {

std::size_t var_count(const Tree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += var_count(c) + 1;
  return n;
}

}  // namespace

// Order: [0], [1], 0::paths(T0), [2], 1::paths(T1), ...
std::vector<Path> paths(const Tree& t) {
  std::vector<Path> out;
  if (t.children.empty()) return {Path{0}};
  out.push_back({0});
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    out.push_back({i + 1});
    for (const auto& q : paths(t.children[i])) {
      Path p{i};
      p.insert(p.end(), q.begin(), q.end());
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Path> max_paths(const Tree& t) {
  if (t.children.empty()) return {Path{0}};
  std::vector<Path> out;
  for (std::size_t i = 0; i < t.children.size(); ++i)
    for (const auto& q : max_paths(t.children[i])) {
      Path p{i};
      p.insert(p.end(), q.begin(), q.end());
      out.push_back(std::move(p));
    }
  return out;
}

bool valid_path(const Tree& t, const Path& p) {
  if (p.empty()) return false;
  const Tree* cur = &t;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] >= cur->children.size()) return false;
    cur = &cur->children[p[i]];
  }
  return p.back() <= cur->children.size();
}

bool is_maximal(const Tree& t, const Path& p) {
  if (!valid_path(t, p) || p.back() != 0) return false;
  return subtree(t, Branch(p.begin(), p.end() - 1)).children.empty();
}

std::size_t path_dim(const Path& p) { return p.size() - 1; }

Path max_disc_path(std::size_t n) { return Path(n + 1, 0); }

std::string show(const Path& p) {
  std::string r = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(p[i]);
  }
  return r + "]";
}

Ctx to_ctx(const Tree& t) {
  if (t.children.empty()) return flat::disc(0);
  Ctx g = flat::suspend(to_ctx(t.children[0]));
  for (std::size_t i = 1; i < t.children.size(); ++i) g = wedge(g, flat::suspend(to_ctx(t.children[i]))).ctx;
  return g;
}

std::size_t path_level(const Tree& t, const Path& p) {
  const Tree* cur = &t;
  std::size_t base = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::size_t j = p[k];
    const bool last = k + 1 == p.size();
    const auto& cs = cur->children;
    if (last) {
      if (j > cs.size()) break;
      if (j == 0) return base;
      // [1] sits right after [0]; each later [i+1] follows the body of child i.
      std::size_t pos = 1;
      for (std::size_t i = 0; i + 1 < j; ++i) pos += 1 + var_count(cs[i]);
      return base + pos;
    }
    if (j >= cs.size()) break;
    std::size_t pos = 1;
    for (std::size_t i = 0; i < j; ++i) pos += 1 + var_count(cs[i]);
    base += pos + 1;
    cur = &cs[j];
  }
  throw flat::malformed("invalid path " + show(p));
}

Term path_var(const Tree& t, const Path& p) {
  return Term::var(flat::index_of(var_count(t), path_level(t, p)));
}

std::size_t snd_level(const Ctx& g) {
  for (std::size_t l = g.size(); l-- > 0;)
    if (g[l].is_star()) return l;
  throw flat::malformed("empty context has no snd");
}

Wedge wedge(const Ctx& g, const Ctx& d) {
  if (g.empty() || d.empty()) throw flat::malformed("wedge of an empty context");
  Wedge w;
  w.ctx = g;
  Sub inr;
  inr.terms.push_back(Term::var(flat::index_of(g.size(), snd_level(g))));
  for (std::size_t j = 1; j < d.size(); ++j) {
    w.ctx.push_back(flat::substitute(d[j], inr));
    inr = flat::weaken(inr);
    inr.terms.push_back(Term::var(0));
  }
  w.inr = std::move(inr);
  Sub inl = flat::identity_sub(g);
  for (std::size_t j = 1; j < d.size(); ++j) inl = flat::weaken(inl);
  w.inl = std::move(inl);
  return w;
}

Sub from_wedge(const Sub& s, const Sub& t) {
  if (t.terms.empty()) throw flat::malformed("wedge with an empty substitution");
  Sub r = s;
  r.terms.insert(r.terms.end(), t.terms.begin() + 1, t.terms.end());
  return r;
}

Sub label_to_sub(const Labelled<Term>& l, const Type& ty) {
  if (l.elems.size() != l.branches.size() + 1) throw flat::malformed("labelling shape mismatch");
  if (l.branches.empty()) return Sub{ty, {l.elems[0]}};
  Sub r;
  for (std::size_t i = 0; i < l.branches.size(); ++i) {
    Sub s = flat::unrestrict(label_to_sub(l.branches[i], Type::arrow(l.elems[i], ty, l.elems[i + 1])));
    r = i == 0 ? std::move(s) : from_wedge(r, s);
  }
  return r;
}

Labelled<Term> label_from_sub(const Tree& t, const Sub& s) {
  if (s.terms.size() != var_count(t)) throw flat::malformed("substitution does not match tree");
  return tabulate<Term>(t, [&](const Path& p) { return s.terms[path_level(t, p)]; });
}

Sub paths_to_sub(const Labelled<Path>& l, const Tree& tgt) {
  return label_to_sub(map_labelled<Term>(l, [&](const Path& p) { return path_var(tgt, p); }));
}

Tree boundary(const Tree& t, std::size_t n) {
  if (n == 0) return Tree{};
  Tree r;
  for (const auto& c : t.children) r.children.push_back(boundary(c, n - 1));
  return r;
}

Path boundary_path(const Tree& t, std::size_t n, ps::Sign e, const Path& p) {
  if (n == 0) {
    if (p != Path{0}) throw flat::malformed("invalid boundary path");
    return Path{e == ps::Sign::Minus ? 0 : t.children.size()};
  }
  if (p.size() == 1) return p;
  Path inner(p.begin() + 1, p.end());
  Path r{p[0]};
  const Path q = boundary_path(t.children.at(p[0]), n - 1, e, inner);
  r.insert(r.end(), q.begin(), q.end());
  return r;
}

Labelled<Path> boundary_label(const Tree& t, std::size_t n, ps::Sign e) {
  return tabulate<Path>(boundary(t, n), [&](const Path& p) { return boundary_path(t, n, e, p); });
}

namespace {

void boundary_paths(const Tree& t, std::size_t n, ps::Sign e, Path& prefix, std::vector<Path>& out) {
  if (n == 0) {
    prefix.push_back(e == ps::Sign::Minus ? 0 : t.children.size());
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t j = 0; j <= t.children.size(); ++j) {
    prefix.push_back(j);
    out.push_back(prefix);
    prefix.pop_back();
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    prefix.push_back(i);
    boundary_paths(t.children[i], n - 1, e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

flat::VarSet boundary_set(const Tree& t, std::size_t n, ps::Sign e) {
  std::vector<Path> ps_;
  Path prefix;
  boundary_paths(t, n, e, prefix, ps_);
  flat::VarSet v(var_count(t), false);
  for (const auto& p : ps_) v[path_level(t, p)] = true;
  return v;
}

Tree from_word(const ps::DyckWord& d) {
  Tree root;
  std::vector<Tree*> stack{&root};
  for (auto m : d.moves) {
    if (m == ps::Move::Up) {
      stack.back()->children.emplace_back();
      stack.push_back(&stack.back()->children.back());
    } else {
      if (stack.size() == 1) throw flat::malformed("Dyck word goes below zero");
      stack.pop_back();
    }
  }
  return root;
}

ps::DyckWord to_word(const Tree& t) {
  ps::DyckWord d;
  for (const auto& c : t.children) {
    d.moves.push_back(ps::Move::Up);
    const auto inner = to_word(c);
    d.moves.insert(d.moves.end(), inner.moves.begin(), inner.moves.end());
    d.moves.push_back(ps::Move::Down);
  }
  return d;
}

bool from_ctx(const Ctx& g, Tree& out) {
  const auto der = ps::derive_ps(g);
  if (!der.ok) return false;
  out = from_word(der.word);
  return to_ctx(out) == g;
}

namespace {

std::vector<std::vector<Tree>> forests(std::size_t nodes);

std::vector<Tree> trees_exact(std::size_t nodes) {
  std::vector<Tree> r;
  if (nodes == 0) return r;
  for (auto& f : forests(nodes - 1)) r.push_back(Tree{f});
  return r;
}

std::vector<std::vector<Tree>> forests(std::size_t nodes) {
  if (nodes == 0) return {{}};
  std::vector<std::vector<Tree>> r;
  for (std::size_t first = 1; first <= nodes; ++first)
    for (const auto& t : trees_exact(first))
      for (const auto& rest : forests(nodes - first)) {
        std::vector<Tree> f{t};
        f.insert(f.end(), rest.begin(), rest.end());
        r.push_back(std::move(f));
      }
  return r;
}

}  // namespace

std::vector<Tree> all_trees(std::size_t max_nodes) {
  std::vector<Tree> r;
  for (std::size_t k = 1; k <= max_nodes; ++k) {
    auto ts = trees_exact(k);
    r.insert(r.end(), ts.begin(), ts.end());
  }
  return r;
}

std::size_t branch_height(const Branch& p) { return p.size() - 1; }

std::size_t leaf_height(const Tree& s, const Branch& p) { return branch_height(p) + height(subtree(s, p)) + 1; }

Path branch_path(const Tree& s, const Branch& p) {
  Path r = p;
  r.insert(r.end(), height(subtree(s, p)) + 1, 0);
  return r;
}

bool valid_branch(const Tree& s, const Branch& p) {
  if (p.empty()) return false;
  const Tree* cur = &s;
  for (auto i : p) {
    if (i >= cur->children.size()) return false;
    cur = &cur->children[i];
  }
  return is_linear(*cur);
}

namespace {

void branches_rec(const Tree& t, Branch& prefix, std::vector<Branch>& out) {
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    prefix.push_back(i);
    if (is_linear(t.children[i])) out.push_back(prefix);
    branches_rec(t.children[i], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Branch> branches(const Tree& s) {
  std::vector<Branch> out;
  Branch prefix;
  branches_rec(s, prefix, out);
  return out;
}

std::vector<Branch> branches_for(const Tree& s, const Path& q) {
  std::vector<Branch> out;
  if (!is_maximal(s, q)) return out;
  const std::size_t d = q.size() - 1;
  for (std::size_t j = 1; j <= d; ++j) {
    bool zeros = true;
    for (std::size_t k = j; k < d; ++k)
      if (q[k] != 0) zeros = false;
    if (!zeros) continue;
    Branch p(q.begin(), q.begin() + static_cast<long>(j));
    if (valid_branch(s, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace catt::tree
