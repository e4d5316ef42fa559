#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "catt/flat.hpp"
#include "catt/pasting.hpp"

// Trees as pasting diagrams, paths and labellings.

namespace catt::tree {

struct Tree {
  std::vector<Tree> children;

  friend bool operator==(const Tree&, const Tree&) = default;
};

using Path = std::vector<std::size_t>;
using Branch = std::vector<std::size_t>;

std::size_t height(const Tree& t);
std::size_t trunk_height(const Tree& t);
bool is_linear(const Tree& t);
std::size_t node_count(const Tree& t);
Tree suspend(const Tree& t);
Tree disc_tree(std::size_t n);
Tree concat(const Tree& a, const Tree& b);
const Tree& subtree(const Tree& t, const Branch& q);  // T^q
std::string show(const Tree& t);

// Paths in the variable order of ⌊T⌋, so paths(t)[level] names that variable.
std::vector<Path> paths(const Tree& t);
std::vector<Path> max_paths(const Tree& t);  // leftmost first
bool is_maximal(const Tree& t, const Path& p);
bool valid_path(const Tree& t, const Path& p);
std::size_t path_dim(const Path& p);
Path max_disc_path(std::size_t n);  // p^n
std::string show(const Path& p);

// Labellings: elements are the 0-cells, branches the sublabellings.
template <class X>
struct Labelled {
  std::vector<X> elems;
  std::vector<Labelled<X>> branches;

  static Labelled singleton(X x) { return Labelled{{std::move(x)}, {}}; }
  friend bool operator==(const Labelled&, const Labelled&) = default;
};

template <class X>
Tree shape(const Labelled<X>& l) {
  Tree t;
  t.children.reserve(l.branches.size());
  for (const auto& b : l.branches) t.children.push_back(shape(b));
  return t;
}

template <class X>
const X& at(const Labelled<X>& l, const Path& p, std::size_t from = 0) {
  if (p.size() - from == 1) {
    if (p[from] >= l.elems.size()) throw flat::malformed("path outside labelling");
    return l.elems[p[from]];
  }
  if (p[from] >= l.branches.size()) throw flat::malformed("path outside labelling");
  return at(l.branches[p[from]], p, from + 1);
}

template <class X>
X& at_mut(Labelled<X>& l, const Path& p, std::size_t from = 0) {
  if (p.size() - from == 1) return l.elems.at(p[from]);
  return at_mut(l.branches.at(p[from]), p, from + 1);
}

template <class Y, class X, class F>
Labelled<Y> map_labelled(const Labelled<X>& l, F&& f) {
  Labelled<Y> r;
  r.elems.reserve(l.elems.size());
  for (const auto& x : l.elems) r.elems.push_back(f(x));
  r.branches.reserve(l.branches.size());
  for (const auto& b : l.branches) r.branches.push_back(map_labelled<Y>(b, f));
  return r;
}

// Build the labelling of shape t whose entry at each path p is f(p).
template <class X, class F>
Labelled<X> tabulate(const Tree& t, F&& f, Path prefix = {}) {
  Labelled<X> r;
  for (std::size_t i = 0; i <= t.children.size(); ++i) {
    prefix.push_back(i);
    r.elems.push_back(f(static_cast<const Path&>(prefix)));
    prefix.pop_back();
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    prefix.push_back(i);
    r.branches.push_back(tabulate<X>(t.children[i], f, prefix));
    prefix.pop_back();
  }
  return r;
}

inline Labelled<Path> identity_paths(const Tree& t) {
  return tabulate<Path>(t, [](const Path& p) { return p; });
}

// Equality on maximal paths only.
template <class X, class Eq>
bool max_equal(const Labelled<X>& a, const Labelled<X>& b, Eq&& eq) {
  const Tree s = shape(a);
  if (!(s == shape(b))) return false;
  for (const auto& p : max_paths(s))
    if (!eq(at(a, p), at(b, p))) return false;
  return true;
}

// The labelling from the disc D^n given endpoint pairs (lowest dimension first) and a top cell.
template <class X>
Labelled<X> disc_labelling(const std::vector<std::pair<X, X>>& lowest_first, X top, std::size_t from = 0) {
  if (from == lowest_first.size()) return Labelled<X>::singleton(std::move(top));
  Labelled<X> r;
  r.elems = {lowest_first[from].first, lowest_first[from].second};
  r.branches.push_back(disc_labelling(lowest_first, std::move(top), from + 1));
  return r;
}

// Flat realisation.
flat::Ctx to_ctx(const Tree& t);
std::size_t path_level(const Tree& t, const Path& p);
flat::Term path_var(const Tree& t, const Path& p);

struct Wedge {
  flat::Ctx ctx;
  flat::Sub inl;
  flat::Sub inr;
};

std::size_t snd_level(const flat::Ctx& g);
Wedge wedge(const flat::Ctx& g, const flat::Ctx& d);
flat::Sub from_wedge(const flat::Sub& s, const flat::Sub& t);

flat::Sub label_to_sub(const Labelled<flat::Term>& l, const flat::Type& ty = flat::Type::star());
Labelled<flat::Term> label_from_sub(const Tree& t, const flat::Sub& s);
flat::Sub paths_to_sub(const Labelled<Path>& l, const Tree& tgt);

// Boundaries.
Tree boundary(const Tree& t, std::size_t n);
Path boundary_path(const Tree& t, std::size_t n, ps::Sign e, const Path& p);
Labelled<Path> boundary_label(const Tree& t, std::size_t n, ps::Sign e);
flat::VarSet boundary_set(const Tree& t, std::size_t n, ps::Sign e);

// Round trip between flat ps-contexts and trees.
Tree from_word(const ps::DyckWord& d);
ps::DyckWord to_word(const Tree& t);
bool from_ctx(const flat::Ctx& g, Tree& out);

// All trees with at most max_nodes nodes (a node is a tree or subtree; [] has one).
std::vector<Tree> all_trees(std::size_t max_nodes);

// Branches.
std::size_t branch_height(const Branch& p);
std::size_t leaf_height(const Tree& s, const Branch& p);
Path branch_path(const Tree& s, const Branch& p);  // P̄
bool valid_branch(const Tree& s, const Branch& p);
std::vector<Branch> branches(const Tree& s);
std::vector<Branch> branches_for(const Tree& s, const Path& maximal);  // by increasing height

}  // namespace catt::tree
