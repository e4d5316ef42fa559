#pragma once

#include <cstddef>

#include "catt/core.hpp"
#include "catt/tree.hpp"

// Standard types, coherences and terms over trees, disc labellings, and the
// insertion construction.

namespace catt::core {

Type standard_type(const Tree& t, std::size_t n);   // U^n_T
Term standard_coh(const Tree& t, std::size_t n);    // C^n_T
Term standard_term(const Tree& t, std::size_t n);   // Tm^n_T

// The labelling {A, t} from D^{dim A}; A must be built from ⋆ and arrows.
Label label_from_disc(const Type& a, const Term& t);

}  // namespace catt::core

namespace catt::tree {

bool insertion_point(const Tree& s, const Branch& p, const Tree& t);
Tree insert_tree(const Tree& s, const Branch& p, const Tree& t);
Labelled<Path> interior_label(const Tree& s, const Branch& p, const Tree& t);
core::Label exterior_label(const Tree& s, const Branch& p, const Tree& t);

// L ≪_P M. Never reads the entry of L at the branch's maximal path.
template <class X>
Labelled<X> insert_label(const Labelled<X>& l, const Branch& p, const Labelled<X>& m, std::size_t from = 0) {
  const std::size_t k = p[from];
  if (k >= l.branches.size()) throw flat::malformed("branch outside labelling");
  Labelled<X> r;
  r.elems.assign(l.elems.begin(), l.elems.begin() + static_cast<long>(k));
  r.branches.assign(l.branches.begin(), l.branches.begin() + static_cast<long>(k));
  if (from + 1 == p.size()) {
    r.elems.insert(r.elems.end(), m.elems.begin(), m.elems.end());
    r.branches.insert(r.branches.end(), m.branches.begin(), m.branches.end());
  } else {
    if (m.branches.size() != 1) throw flat::malformed("inserted labelling is not a suspension");
    r.elems.push_back(m.elems[0]);
    r.elems.push_back(m.elems[1]);
    r.branches.push_back(insert_label(l.branches[k], p, m.branches[0], from + 1));
  }
  r.elems.insert(r.elems.end(), l.elems.begin() + static_cast<long>(k) + 2, l.elems.end());
  r.branches.insert(r.branches.end(), l.branches.begin() + static_cast<long>(k) + 1, l.branches.end());
  return r;
}

}  // namespace catt::tree
