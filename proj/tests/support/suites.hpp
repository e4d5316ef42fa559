#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "support/gen.hpp"

// Whole-suite checks shared by the property tests and the acceptance binary.
// Each returns how many cases it looked at and how many of them failed.

namespace catt::testing {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what);
  bool ok() const { return checked > 0 && failed == 0; }
  Tally& operator+=(const Tally& o);
};

std::string describe(const Tally& t);

// Oracle and NbE normal forms agree; `sua` picks the preset.
Tally nbe_oracle_agreement(const std::vector<SuiteEntry>& suite, bool sua);
// Random reduction orders reach the leftmost normal form.
Tally oracle_seed_invariance(const std::vector<SuiteEntry>& suite, std::size_t seeds);
// Every non-cell step along each reduction path lowers the complexity.
Tally complexity_decrease(const std::vector<SuiteEntry>& suite);
// Terms over D¹ and D² normalise under su to iterated identities on variables.
Tally disc_trivialisation(std::uint64_t seed, std::size_t per_disc);

Tally substitution_laws(std::uint64_t seed);
Tally disc_laws(std::uint64_t seed);
Tally prune_commutation();
Tally labelling_laws(std::uint64_t seed);
Tally insertion_laws();
Tally pushout_factorisation(std::uint64_t seed);
Tally boundary_agreement();

}  // namespace catt::testing
