#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "catt/core.hpp"
#include "catt/nbe.hpp"
#include "catt/surface.hpp"

// The bidirectional typechecker: raw syntax in, core syntax out.

namespace catt::tc {

struct Binding {
  core::Ctx ctx;
  core::Term term;
  core::Type type;
};

class Signature {
public:
  explicit Signature(nbe::EvalConfig cfg = nbe::EvalConfig::weak()) : cfg_(cfg) {}

  const nbe::EvalConfig& config() const { return cfg_; }
  const Binding* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  void insert(const std::string& name, Binding b);
  const std::map<std::string, Binding>& bindings() const { return bindings_; }

private:
  nbe::EvalConfig cfg_;
  std::map<std::string, Binding> bindings_;
};

struct Inferred {
  core::Ctx ctx;
  core::Term term;
  core::Type type;
};

struct Checked {
  core::Term term;
  core::Type type;
};

struct CheckedType {
  core::Type type;
  nbe::NfType nf;
};

struct CheckedLabel {
  core::Label label;
  nbe::NfType ty;  // type of the 0-cells
};

Inferred infer(const surface::RawTerm& s, const Signature& sig);
Checked check_term(const surface::RawTerm& s, const core::Ctx& u, const Signature& sig);
CheckedType check_type(const surface::RawType& a, const core::Ctx& u, const Signature& sig);
void check_type_against(const surface::RawType& a, const core::Ctx& u, const nbe::NfType& c, const Signature& sig);
core::Ctx check_ctx(const surface::RawCtx& g, const Signature& sig);
core::Sub check_sub(const surface::RawArgs& sigma, const core::FlatCtx& g, const core::Ctx& u, const Signature& sig,
                    const Span& at = {});
CheckedLabel check_label(const surface::RawArgs& l, const core::Ctx& u, const Signature& sig);
bool support_check(const tree::Tree& t, const nbe::NfType& c, ps::OpSet ops);

// The labelling from_sub_T(σ): maximal positions take the given terms, the rest are holes.
std::optional<surface::RawTree> from_sub(const tree::Tree& t, const std::vector<surface::RawTerm>& terms);

// Helpers over checked contexts.
core::Type var_type(const core::Ctx& u, const core::Pos& p);
nbe::NfTerm nf(const core::Term& t, const core::Ctx& u, const nbe::EvalConfig& cfg);
nbe::NfType nf(const core::Type& a, const core::Ctx& u, const nbe::EvalConfig& cfg);
core::Ctx suspend(const core::Ctx& u);

}  // namespace catt::tc
