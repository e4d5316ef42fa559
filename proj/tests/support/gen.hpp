#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "catt/flat.hpp"
#include "catt/tree.hpp"

// Seeded generators of well-scoped and well-typed flat syntax for property tests.

namespace catt::testing {

using Rng = std::mt19937_64;

struct Typed {
  flat::Term term;
  flat::Type type;
};

// A ps-context with at most max_vars variables, given as its tree.
tree::Tree random_tree(Rng& rng, std::size_t max_vars);

// A well-typed term over ⌊t⌋ (weak CATT, syntactic type equality) with at most
// `cohs` coherence constructors and dimension at most max_dim.
Typed random_term(Rng& rng, const tree::Tree& t, std::size_t cohs, std::size_t max_dim);

// A well-scoped (not necessarily well-typed) term over a context of length n.
flat::Term random_scoped_term(Rng& rng, std::size_t n, std::size_t depth);
flat::Type random_scoped_type(Rng& rng, std::size_t n, std::size_t depth);
flat::Sub random_scoped_sub(Rng& rng, std::size_t domain, std::size_t codomain, std::size_t depth);

// A well-formed type of dimension n over ⌊t⌋ built from variables and coherences.
flat::Type random_type(Rng& rng, const tree::Tree& t, std::size_t n);

// The suite shared by the agreement, confluence and termination checks.
struct SuiteEntry {
  tree::Tree ctx;
  Typed typed;
};
std::vector<SuiteEntry> random_suite(std::uint64_t seed, std::size_t count);

}  // namespace catt::testing
