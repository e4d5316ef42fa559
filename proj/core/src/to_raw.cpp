#include "catt/to_raw.hpp"

namespace catt::surface {

using core::Ctx;
using core::FlatCtx;
using core::TreeCtx;

Ctx desuspend(const Ctx& c) {
  if (const auto* t = std::get_if<TreeCtx>(&c)) {
    if (t->tree.children.size() != 1) return core::unnamed(tree::Tree{});
    return TreeCtx{t->tree.children[0], t->names.branches[0]};
  }
  const auto& f = std::get<FlatCtx>(c);
  FlatCtx out;
  for (std::size_t i = 2; i < f.names.size(); ++i) {
    out.names.push_back(f.names[i]);
    const core::Type& a = f.types[i];
    out.types.push_back(a.kind() == core::TypeKind::Susp ? a->base : a);
  }
  return out;
}

Ctx segment(const TreeCtx& c, std::size_t n, std::size_t m) {
  TreeCtx out;
  out.tree.children.assign(c.tree.children.begin() + static_cast<long>(n),
                           c.tree.children.begin() + static_cast<long>(m));
  out.names.elems.assign(c.names.elems.begin() + static_cast<long>(n),
                         c.names.elems.begin() + static_cast<long>(m) + 1);
  out.names.branches.assign(c.names.branches.begin() + static_cast<long>(n),
                            c.names.branches.begin() + static_cast<long>(m));
  return out;
}

namespace {

NameTree positional_names(const tree::Tree& t) {
  return tree::tabulate<std::optional<std::string>>(t, [](const tree::Path& p) { return core::to_name(core::Pos{p}); });
}

RawTree label_entries(const core::Label& l, const Ctx* ctx, bool keep) {
  const tree::Tree s = tree::shape(l.tree);
  RawTree out = tree::map_labelled<std::optional<RawTerm>>(
      l.tree, [&](const core::Term& t) -> std::optional<RawTerm> { return to_raw(t, ctx, keep); });
  if (!keep) {
    for (const auto& p : tree::paths(s))
      if (!tree::is_maximal(s, p)) tree::at_mut(out, p) = std::nullopt;
  }
  return out;
}

}  // namespace

RawTerm to_raw(const core::Term& t, const Ctx* ctx, bool keep) {
  using core::TermKind;
  RawTermNode n;
  switch (t.kind()) {
    case TermKind::Var: {
      std::optional<std::string> name = ctx ? core::name_of(*ctx, t->pos) : std::nullopt;
      return raw_name(name ? *name : core::to_name(t->pos));
    }
    case TermKind::TopLvl: return raw_name(t->name);
    case TermKind::Coh: {
      const Ctx inner = TreeCtx{t->tree, positional_names(t->tree)};
      n.kind = RTermKind::Coh;
      n.ctx = std::get<TreeCtx>(inner).names;
      n.type = to_raw(t->type, &inner, keep);
      break;
    }
    case TermKind::Id: n.kind = RTermKind::Id; break;
    case TermKind::Comp: n.kind = RTermKind::Comp; break;
    case TermKind::Inc: {
      n.kind = RTermKind::Inc;
      n.n = t->n;
      n.m = t->m;
      const auto* tc = ctx ? std::get_if<TreeCtx>(ctx) : nullptr;
      if (tc && t->m <= tc->tree.children.size()) {
        const Ctx seg = segment(*tc, t->n, t->m);
        n.inner = to_raw(*t->inner, &seg, keep);
      } else {
        n.inner = to_raw(*t->inner, nullptr, keep);
      }
      break;
    }
    case TermKind::AppSub:
      n.kind = RTermKind::App;
      n.inner = to_raw(*t->inner, nullptr, keep);
      n.args = to_raw(t->sub, ctx, keep);
      break;
    case TermKind::AppLabel:
      n.kind = RTermKind::App;
      n.inner = to_raw(*t->inner, nullptr, keep);
      n.args = to_raw(t->label, ctx, keep);
      break;
    case TermKind::Susp: {
      n.kind = RTermKind::Susp;
      if (ctx) {
        const Ctx inner = desuspend(*ctx);
        n.inner = to_raw(*t->inner, &inner, keep);
      } else {
        n.inner = to_raw(*t->inner, nullptr, keep);
      }
      break;
    }
  }
  return make_term(std::move(n));
}

RawArgs to_raw(const core::Sub& s, const Ctx* ctx, bool keep) {
  RawArgs a;
  a.form = RawArgs::Form::Sub;
  for (const auto& t : s.terms) a.terms.push_back(to_raw(t, ctx, keep));
  if (keep && !s.ty.is_star()) a.ty = to_raw(s.ty, ctx, keep);
  return a;
}

RawArgs to_raw(const core::Label& l, const Ctx* ctx, bool keep) {
  RawArgs a;
  a.label = label_entries(l, ctx, keep);
  bool top_empty = true;
  for (const auto& e : a.label.elems)
    if (e) top_empty = false;
  a.form = top_empty ? RawArgs::Form::Square : RawArgs::Form::Full;
  if (keep && !l.ty.is_star()) a.ty = to_raw(l.ty, ctx, keep);
  return a;
}

RawType to_raw(const core::Type& a, const Ctx* ctx, bool keep) {
  using core::TypeKind;
  switch (a.kind()) {
    case TypeKind::Star: return raw_star();
    case TypeKind::Arrow: {
      std::optional<RawType> base;
      if (keep && !a->base.is_star()) base = to_raw(a->base, ctx, keep);
      return raw_arrow(to_raw(*a->src, ctx, keep), base, to_raw(*a->tgt, ctx, keep));
    }
    case TypeKind::AppSub:
    case TypeKind::AppLabel: {
      RawTypeNode n;
      n.kind = RTypeKind::App;
      n.base = to_raw(a->base, nullptr, keep);
      n.args = a.kind() == TypeKind::AppSub ? to_raw(a->sub, ctx, keep) : to_raw(a->label, ctx, keep);
      return make_type(std::move(n));
    }
    case TypeKind::Susp: {
      RawTypeNode n;
      n.kind = RTypeKind::Susp;
      if (ctx) {
        const Ctx inner = desuspend(*ctx);
        n.base = to_raw(a->base, &inner, keep);
      } else {
        n.base = to_raw(a->base, nullptr, keep);
      }
      return make_type(std::move(n));
    }
  }
  return raw_star();
}

RawCtx to_raw(const Ctx& c, bool keep) {
  RawCtx out;
  if (const auto* t = std::get_if<TreeCtx>(&c)) {
    out.ctx = t->names;
    return out;
  }
  const auto& f = std::get<FlatCtx>(c);
  std::vector<RawCtxEntry> entries;
  for (std::size_t i = 0; i < f.types.size(); ++i) {
    const std::string name = f.names[i].empty() ? core::to_name(core::Pos{core::Level{i}}) : f.names[i];
    entries.push_back(RawCtxEntry{name, to_raw(f.types[i], &c, keep), {}});
  }
  out.ctx = std::move(entries);
  return out;
}

std::string show(const nbe::NfTerm& t, const Ctx& c, bool keep) { return pretty(to_raw(nbe::quote(t), &c, keep)); }

std::string show(const nbe::NfType& a, const Ctx& c, bool keep) { return pretty(to_raw(nbe::quote(a), &c, keep)); }

}  // namespace catt::surface
