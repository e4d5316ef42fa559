#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catt/flat.hpp"

// Ps-contexts, Dyck words, peaks, pruning and operation sets.

namespace catt::ps {

enum class Move { Up, Down };

struct DyckWord {
  std::vector<Move> moves;

  std::size_t trailing_dim() const;
  bool valid() const;  // every prefix has at least as many ups as downs
  std::size_t variables() const { return 1 + 2 * ups(); }
  std::size_t ups() const;
  friend bool operator==(const DyckWord&, const DyckWord&) = default;
};

std::string show(const DyckWord& d);
DyckWord disc_word(std::size_t n);

// One PSE step of a ps derivation: the context was extended by (y : A), (f : x -> y).
struct Extension {
  std::size_t x;  // level of the source variable
  std::size_t y;  // level of the new target
  std::size_t f;  // level of the new cell
  std::size_t dim_a;
};

struct PsDerivation {
  bool ok = false;
  std::size_t failed_at = 0;  // level where recognition failed
  std::vector<Extension> steps;
  DyckWord word;
};

PsDerivation derive_ps(const flat::Ctx& g);
bool check_ps(const flat::Ctx& g);

struct Realisation {
  flat::Ctx ctx;
  flat::Type ty;
  flat::Term tm;
};

Realisation dyck_realise(const DyckWord& d);

// A peak is the position i of an Up with moves[i+1] == Down.
using Peak = std::size_t;

std::vector<Peak> peaks(const DyckWord& d);
flat::Term peak_var(const DyckWord& d, Peak p);
std::size_t peak_level(const DyckWord& d, Peak p);

struct Pruned {
  DyckWord word;
  flat::Sub pi;  // [D] -> [D // p]
};

Pruned prune(const DyckWord& d, Peak p);
flat::Sub prune_sub(const flat::Sub& s, const DyckWord& d, Peak p);

enum class Sign { Minus, Plus };
enum class OpSet { Regular, Groupoidal };

flat::VarSet boundary_set(const flat::Ctx& g, std::size_t n, Sign e);
bool op_allowed(OpSet o, const flat::Ctx& g, const flat::VarSet& u, const flat::VarSet& v);

// All Dyck words with trailing dimension 0 and at most max_ups ups.
std::vector<DyckWord> all_words(std::size_t max_ups);

}  // namespace catt::ps
