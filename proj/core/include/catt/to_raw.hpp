#pragma once

#include "catt/core.hpp"
#include "catt/nbe.hpp"
#include "catt/surface.hpp"

// Core syntax back to raw syntax for display and round trips. Variables take
// their context names where known and positional names otherwise. Without
// keep_implicits only locally maximal labelling entries are kept.

namespace catt::surface {

RawTerm to_raw(const core::Term& t, const core::Ctx* ctx, bool keep_implicits);
RawType to_raw(const core::Type& a, const core::Ctx* ctx, bool keep_implicits);
RawArgs to_raw(const core::Sub& s, const core::Ctx* ctx, bool keep_implicits);
RawArgs to_raw(const core::Label& l, const core::Ctx* ctx, bool keep_implicits);
RawCtx to_raw(const core::Ctx& c, bool keep_implicits);

// Contexts seen from inside a suspension or an inclusion.
core::Ctx desuspend(const core::Ctx& c);
core::Ctx segment(const core::TreeCtx& c, std::size_t n, std::size_t m);

// Shorthands printing a normal form over a context.
std::string show(const nbe::NfTerm& t, const core::Ctx& c, bool keep_implicits);
std::string show(const nbe::NfType& a, const core::Ctx& c, bool keep_implicits);

}  // namespace catt::surface
