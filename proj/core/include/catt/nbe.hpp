#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catt/core.hpp"
#include "catt/pasting.hpp"
#include "catt/tree.hpp"

// Normal forms, environments, evaluation and quotation.

namespace catt::nbe {

using core::Pos;
using tree::Branch;
using tree::Path;
using tree::Tree;

enum class Insertion { None, Identities, Full };

struct EvalConfig {
  bool disc_removal = false;
  bool endo_coherence_removal = false;
  Insertion insertion = Insertion::None;
  ps::OpSet ops = ps::OpSet::Regular;
  bool keep_implicits = false;

  static EvalConfig weak() { return {}; }
  static EvalConfig su() { return {true, true, Insertion::Identities, ps::OpSet::Regular, false}; }
  static EvalConfig sua() { return {true, true, Insertion::Full, ps::OpSet::Regular, false}; }

  friend bool operator==(const EvalConfig&, const EvalConfig&) = default;
};

std::string show(const EvalConfig& c);

struct NfNode;
struct Head;

class NfTerm {
public:
  NfTerm();  // var at level 0
  static NfTerm var(Pos p);
  static NfTerm apply(const Head& h, tree::Labelled<NfTerm> l);

  bool is_var() const;
  const NfNode* operator->() const { return n_.get(); }

  friend bool operator==(const NfTerm& a, const NfTerm& b);

private:
  explicit NfTerm(std::shared_ptr<const NfNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const NfNode> n_;
};

// Highest dimension first; ⋆ is empty.
using NfType = std::vector<std::pair<NfTerm, NfTerm>>;
using NfLabel = tree::Labelled<NfTerm>;

enum class HeadKind { Coh, Id, Comp };

struct Head {
  HeadKind kind = HeadKind::Id;
  Tree tree;        // Coh and Comp
  NfType type;      // Coh, positioned over the paths of tree
  std::size_t n = 0;  // Id

  static Head coh(Tree t, NfType a) { return Head{HeadKind::Coh, std::move(t), std::move(a), 0}; }
  static Head id(std::size_t n) { return Head{HeadKind::Id, {}, {}, n}; }
  static Head comp(Tree t) { return Head{HeadKind::Comp, std::move(t), {}, 0}; }
  Tree domain() const;  // the tree the head is applied over

  friend bool operator==(const Head&, const Head&) = default;
};

struct NfNode {
  bool is_var = true;
  Pos pos = core::Level{0};
  Head head;
  NfLabel label;
};

// Environments: a container of normal forms indexed by positions, plus a type.
struct Env {
  std::variant<std::vector<NfTerm>, NfLabel> items;
  NfType ty;

  bool is_label() const { return std::holds_alternative<NfLabel>(items); }
  const NfLabel& label() const { return std::get<NfLabel>(items); }
  const std::vector<NfTerm>& terms() const { return std::get<std::vector<NfTerm>>(items); }
  NfTerm at(const Pos& p) const;
};

Env restrict_env(const Env& r);
NfLabel down_env(const Env& r);
Env include_env(const Env& r, std::size_t n, std::size_t m);
Env id_env(const core::Ctx& c);
Env id_env(const Tree& t);
Env id_env(std::size_t n);

NfTerm eval(const core::Term& t, const Env& r, const EvalConfig& cfg);
NfType eval(const core::Type& a, const Env& r, const EvalConfig& cfg);
Env eval(const core::Sub& s, const Env& r, const EvalConfig& cfg);
Env eval(const core::Label& l, const Env& r, const EvalConfig& cfg);

core::Term quote(const NfTerm& t);
core::Type quote(const NfType& a);
core::Label quote(const NfLabel& l);
core::Term quote(const Head& h);

struct Redex {
  Branch branch;
  Tree inner;
  NfLabel inner_label;
};

std::optional<Redex> find_insertion_redex(const Tree& s, const NfLabel& l, const EvalConfig& cfg);

// The standard type U^n_T evaluated over the identity environment of T.
NfType standard_nf(const Tree& t, std::size_t n, const EvalConfig& cfg);

std::size_t size(const NfTerm& t);
std::size_t size(const NfType& a);
std::size_t size(const NfLabel& l);

// Flattening through quotation.
flat::Term flatten(const NfTerm& t, const core::Scope& s);
flat::Type flatten(const NfType& a, const core::Scope& s);

// Iterated identity on a variable: Id_k applied to a disc labelling whose top entry is a variable.
bool is_iterated_identity(const NfTerm& t);

std::string show(const NfTerm& t);
std::string show(const NfType& a);

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace catt::nbe
