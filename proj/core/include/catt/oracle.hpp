#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catt/flat.hpp"

// A small-step rewriting engine over flat syntax, independent of evaluation.
// It reduces with dr ∪ prune' ∪ ecr' (SuPrime) or dr ∪ ecr' ∪ insert'
// (SuaPrime), where the primed rules never fire on identities and insertion
// only moves identities and non-unary standard composites.

namespace catt::oracle {

enum class RuleSet { SuPrime, SuaPrime };
enum class Rule { DiscRemoval, EndoCoherence, Pruning, Insertion };

std::string show(Rule r);

struct Step {
  flat::Term result;
  Rule rule;
  bool cell = false;                // the rule fired inside a coherence type
  std::vector<std::string> where;   // congruence route from the root, e.g. "arg 4", "cell src"
};

struct TypeStep {
  flat::Type result;
  Rule rule;
  bool cell = false;
  std::vector<std::string> where;  // "src", "base", "tgt", then the term route
};

std::string show(const Step& s);

// Every single-step reduct, head rules first, then cell, then argument reductions.
std::vector<Step> step(const flat::Term& t, RuleSet r);
std::vector<TypeStep> step(const flat::Type& a, RuleSet r);

// Syntactic complexity: coefficient i counts ω^i, compared from the top down.
struct Complexity {
  std::vector<std::size_t> coeffs;

  Complexity& operator+=(const Complexity& o);
  friend bool operator==(const Complexity& a, const Complexity& b);
  friend bool operator<(const Complexity& a, const Complexity& b);
};

std::string show(const Complexity& c);
Complexity complexity(const flat::Term& t);
Complexity complexity(const flat::Type& a);
Complexity complexity(const flat::Sub& s);

struct not_terminating : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxSteps = 100000;

flat::Term normalise(const flat::Term& t, RuleSet r);  // leftmost reduct each time
flat::Type normalise(const flat::Type& a, RuleSet r);
flat::Term normalise_random(const flat::Term& t, RuleSet r, std::uint64_t seed);
std::vector<Step> normalise_trace(const flat::Term& t, RuleSet r);

// Compatibility overloads taking the ambient context, which the rules never inspect.
inline std::vector<Step> step(const flat::Term& t, const flat::Ctx&, RuleSet r) { return step(t, r); }
inline flat::Term normalise_random(const flat::Term& t, const flat::Ctx&, RuleSet r, std::uint64_t seed) {
  return normalise_random(t, r, seed);
}
inline std::vector<Step> normalise_trace(const flat::Term& t, const flat::Ctx&, RuleSet r) {
  return normalise_trace(t, r);
}

struct ConfluenceReport {
  std::size_t pairs = 0;
  std::vector<std::pair<flat::Term, flat::Term>> unjoined;
};

// For every pair of distinct single-step reducts, look for a common reduct
// within `depth` further steps of each.
ConfluenceReport local_confluence_sample(const flat::Term& t, RuleSet r, std::size_t depth);

// A from-scratch typing check for flat CATT terms with the regular operation
// set. Type equality compares normal forms under the rule set when one is given
// and is syntactic otherwise.
std::optional<flat::Type> infer_type(const flat::Ctx& g, const flat::Term& t, std::optional<RuleSet> r);
bool check_ctx(const flat::Ctx& g, std::optional<RuleSet> r);

}  // namespace catt::oracle
