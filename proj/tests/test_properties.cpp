#include <doctest.h>

#include "support/suites.hpp"

using namespace catt::testing;

namespace {

void expect(const Tally& t) {
  INFO(describe(t));
  CHECK(t.checked > 0);
  CHECK(t.failed == 0);
}

}  // namespace

TEST_CASE("substitution is associative and unital") { expect(substitution_laws(101)); }
TEST_CASE("suspended discs and sphere types") { expect(disc_laws(102)); }
TEST_CASE("pruning commutes with realisation on short Dyck words") { expect(prune_commutation()); }
TEST_CASE("labellings round trip and respect substitution") { expect(labelling_laws(103)); }
TEST_CASE("interior and exterior labellings on small trees") { expect(insertion_laws()); }
TEST_CASE("inserted labellings factor cocones uniquely") { expect(pushout_factorisation(104)); }
TEST_CASE("tree and context boundary sets agree") { expect(boundary_agreement()); }

TEST_CASE("oracle and evaluation agree on random terms") {
  const auto suite = random_suite(7, 150);
  expect(nbe_oracle_agreement(suite, false));
  expect(nbe_oracle_agreement(suite, true));
  expect(oracle_seed_invariance(suite, 3));
}

TEST_CASE("reduction steps lower the complexity") { expect(complexity_decrease(random_suite(8, 100))); }
TEST_CASE("disc contexts trivialise") { expect(disc_trivialisation(9, 300)); }
