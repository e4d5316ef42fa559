#include "catt/typecheck.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "catt/standard.hpp"
#include "catt/to_raw.hpp"

namespace catt::tc {

using core::Ctx;
using core::FlatCtx;
using core::Term;
using core::TreeCtx;
using core::Type;
using nbe::NfTerm;
using nbe::NfType;
using surface::RawArgs;
using surface::RawCtx;
using surface::RawTerm;
using surface::RawTree;
using surface::RawType;
using surface::RTermKind;
using surface::RTypeKind;
using tree::Path;
using tree::Tree;

const Binding* Signature::find(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Signature::insert(const std::string& name, Binding b) {
  if (!bindings_.emplace(name, std::move(b)).second) throw std::invalid_argument("duplicate binding " + name);
}

namespace {

[[noreturn]] void fail(const std::string& msg, const Span& span, const std::string& label = {}) {
  throw Error(msg, span, label);
}

std::string show_nf(const NfTerm& t, const Ctx& u, const Signature& sig) {
  return surface::show(t, u, sig.config().keep_implicits);
}

std::string show_nf(const NfType& a, const Ctx& u, const Signature& sig) {
  return surface::show(a, u, sig.config().keep_implicits);
}

std::string show_ctx(const Ctx& u) { return surface::pretty(surface::to_raw(u, false)); }

Span tree_span(const RawTree& t, Span fallback) {
  Span s{};
  bool any = false;
  std::function<void(const RawTree&)> walk = [&](const RawTree& l) {
    for (const auto& e : l.elems) {
      if (!e || e->span().synthetic()) continue;
      s = any ? Span::join(s, e->span()) : e->span();
      any = true;
    }
    for (const auto& b : l.branches) walk(b);
  };
  walk(t);
  return any ? s : fallback;
}

Type path_type(const Path& p) {
  if (p.size() == 1) return Type::star();
  Path q(p.begin(), p.end() - 1);
  Path next = q;
  ++next.back();
  return Type::arrow(core::path(q), path_type(q), core::path(next));
}

void check_names(const surface::NameTree& names, const Span& span) {
  std::set<std::string> seen;
  std::function<void(const surface::NameTree&)> walk = [&](const surface::NameTree& l) {
    for (const auto& e : l.elems)
      if (e && !seen.insert(*e).second) fail("duplicate variable name '" + *e + "'", span, "'" + *e + "' is bound twice");
    for (const auto& b : l.branches) walk(b);
  };
  walk(names);
}

bool same_ctx(const Ctx& a, const Ctx& b) {
  if (core::is_tree(a) != core::is_tree(b)) return false;
  if (core::is_tree(a)) return std::get<TreeCtx>(a).tree == std::get<TreeCtx>(b).tree;
  return std::get<FlatCtx>(a).types == std::get<FlatCtx>(b).types;
}

Checked via_infer(const RawTerm& s, const Ctx& u, const Signature& sig) {
  Inferred i = infer(s, sig);
  if (!same_ctx(i.ctx, u))
    fail("term lives in a different context", s.span(),
         "it lives in " + show_ctx(i.ctx) + " but is used in " + show_ctx(u));
  return {i.term, i.type};
}

const Tree* tree_of(const Ctx& u) {
  const auto* t = std::get_if<TreeCtx>(&u);
  return t ? &t->tree : nullptr;
}

void check_term_against(const RawTerm& s, const Ctx& u, const NfTerm& expected, const Signature& sig) {
  if (s.kind() == RTermKind::Hole) return;
  const Checked c = check_term(s, u, sig);
  const NfTerm got = nf(c.term, u, sig.config());
  if (!(got == expected))
    fail("given term does not match inferred term", s.span(),
         "given " + show_nf(got, u, sig) + ", inferred " + show_nf(expected, u, sig));
}

struct LabelResult {
  tree::Labelled<Term> terms;
  NfType ty;
};

LabelResult check_label_rec(const RawTree& l, const Ctx& u, const Signature& sig, const Span& fallback) {
  const auto& cfg = sig.config();
  if (l.branches.empty()) {
    if (!l.elems[0] || l.elems[0]->kind() == RTermKind::Hole)
      fail("cannot infer this argument", l.elems[0] ? l.elems[0]->span() : fallback,
           "a locally maximal argument must be given");
    const Checked c = check_term(*l.elems[0], u, sig);
    return {tree::Labelled<Term>::singleton(c.term), nf(c.type, u, cfg)};
  }
  LabelResult out;
  std::vector<NfType> tys;
  for (std::size_t i = 0; i < l.branches.size(); ++i) {
    const Span here = tree_span(l.branches[i], fallback);
    LabelResult b = check_label_rec(l.branches[i], u, sig, here);
    if (b.ty.empty())
      fail("expected a cell of positive dimension", here, "this argument is a 0-cell");
    if (i > 0) {
      const NfType& prev = tys.back();
      if (!std::equal(prev.begin() + 1, prev.end(), b.ty.begin() + 1, b.ty.end()))
        fail("arguments do not lie over the same type", here,
             "expected over " + show_nf(NfType(prev.begin() + 1, prev.end()), u, sig) + ", found over " +
                 show_nf(NfType(b.ty.begin() + 1, b.ty.end()), u, sig));
      if (!(prev[0].second == b.ty[0].first))
        fail("source of this argument does not match the target of the previous one", here,
             "source " + show_nf(b.ty[0].first, u, sig) + ", previous target " + show_nf(prev[0].second, u, sig));
    }
    tys.push_back(b.ty);
    out.terms.branches.push_back(std::move(b.terms));
  }
  for (std::size_t i = 0; i < l.elems.size(); ++i) {
    const NfTerm& expected = i < tys.size() ? tys[i][0].first : tys.back()[0].second;
    const auto& x = l.elems[i];
    if (x && x->kind() != RTermKind::Hole) {
      const Checked c = check_term(*x, u, sig);
      const NfTerm got = nf(c.term, u, cfg);
      if (!(got == expected))
        fail("given term does not match inferred term", x->span(),
             "given " + show_nf(got, u, sig) + ", inferred " + show_nf(expected, u, sig));
      out.terms.elems.push_back(c.term);
    } else {
      out.terms.elems.push_back(nbe::quote(expected));
    }
  }
  out.ty = NfType(tys[0].begin() + 1, tys[0].end());
  return out;
}

Checked check_app(const RawTerm& s, const Ctx& u, const Signature& sig) {
  const RawArgs& args = *s->args;
  const RawTerm& inner = *s->inner;
  if (args.form == RawArgs::Form::Sub) {
    Inferred i = infer(inner, sig);
    if (const Tree* t = tree_of(i.ctx)) {
      auto l = from_sub(*t, args.terms);
      if (!l)
        fail("expected " + std::to_string(tree::max_paths(*t).size()) + " arguments, found " +
                 std::to_string(args.terms.size()),
             args.span, "the term is over " + show_ctx(i.ctx));
      RawArgs la;
      la.form = RawArgs::Form::Full;
      la.label = std::move(*l);
      la.ty = args.ty;
      la.span = args.span;
      const CheckedLabel cl = check_label(la, u, sig);
      return {Term::app_label(i.term, cl.label), Type::app_label(i.type, cl.label)};
    }
    const core::Sub tau = check_sub(args, std::get<FlatCtx>(i.ctx), u, sig, args.span);
    return {Term::app_sub(i.term, tau), Type::app_sub(i.type, tau)};
  }
  const CheckedLabel cl = check_label(args, u, sig);
  const Ctx inner_ctx = core::unnamed(tree::shape(cl.label.tree));
  const Checked c = check_term(inner, inner_ctx, sig);
  return {Term::app_label(c.term, cl.label), Type::app_label(c.type, cl.label)};
}

}  // namespace

Type var_type(const Ctx& u, const core::Pos& p) {
  if (const auto* f = std::get_if<FlatCtx>(&u)) return f->types.at(std::get<core::Level>(p));
  return path_type(std::get<Path>(p));
}

NfTerm nf(const Term& t, const Ctx& u, const nbe::EvalConfig& cfg) { return nbe::eval(t, nbe::id_env(u), cfg); }

NfType nf(const Type& a, const Ctx& u, const nbe::EvalConfig& cfg) { return nbe::eval(a, nbe::id_env(u), cfg); }

Ctx suspend(const Ctx& u) {
  if (const auto* t = std::get_if<TreeCtx>(&u)) {
    TreeCtx out;
    out.tree = tree::suspend(t->tree);
    out.names.elems = {std::nullopt, std::nullopt};
    out.names.branches = {t->names};
    return out;
  }
  const auto& f = std::get<FlatCtx>(u);
  FlatCtx out;
  out.names = {"", ""};
  out.types = {Type::star(), Type::star()};
  for (std::size_t i = 0; i < f.types.size(); ++i) {
    out.names.push_back(f.names[i]);
    out.types.push_back(Type::susp(f.types[i]));
  }
  return out;
}

std::optional<RawTree> from_sub(const Tree& t, const std::vector<RawTerm>& terms) {
  const auto maxes = tree::max_paths(t);
  if (maxes.size() != terms.size()) return std::nullopt;
  RawTree l = tree::tabulate<std::optional<RawTerm>>(t, [](const Path&) { return std::nullopt; });
  for (std::size_t i = 0; i < maxes.size(); ++i) tree::at_mut(l, maxes[i]) = terms[i];
  return l;
}

Inferred infer(const RawTerm& s, const Signature& sig) {
  switch (s.kind()) {
    case RTermKind::Name: {
      const Binding* b = sig.find(s->name);
      if (!b) fail("unknown name '" + s->name + "'", s.span(), "not defined");
      return {b->ctx, Term::top_lvl(s->name, b->term), b->type};
    }
    case RTermKind::Coh: {
      check_names(s->ctx, s.span());
      const Tree t = tree::shape(s->ctx);
      const Ctx u = TreeCtx{t, s->ctx};
      const CheckedType a = check_type(*s->type, u, sig);
      if (a.nf.empty()) fail("a coherence must have an arrow type", (*s->type).span(), "this type is *");
      if (!support_check(t, a.nf, sig.config().ops))
        fail("coherence does not satisfy the support condition", (*s->type).span(),
             "source and target must both be full, or be the source and target boundary of the tree");
      return {u, Term::coh(t, a.type), a.type};
    }
    case RTermKind::Id:
      return {core::unnamed(Tree{}), Term::id(0), Type::arrow(core::path({0}), Type::star(), core::path({0}))};
    case RTermKind::Susp: {
      Inferred i = infer(*s->inner, sig);
      return {suspend(i.ctx), Term::susp(i.term), Type::susp(i.type)};
    }
    case RTermKind::Hole: fail("cannot infer a hole", s.span(), "a hole may only stand where its value is determined");
    case RTermKind::Comp: fail("cannot infer the tree of 'comp'", s.span(), "apply it to a labelling or give a context");
    case RTermKind::Inc: fail("cannot infer the context of an inclusion", s.span(), "give a context");
    case RTermKind::App: fail("cannot infer the context of an application", s.span(), "give a context");
  }
  fail("unknown term", s.span());
}

Checked check_term(const RawTerm& s, const Ctx& u, const Signature& sig) {
  switch (s.kind()) {
    case RTermKind::Name: {
      if (auto p = core::lookup(u, s->name)) return {Term::var(*p), var_type(u, *p)};
      if (sig.contains(s->name)) return via_infer(s, u, sig);
      fail("unknown variable '" + s->name + "'", s.span(), "not in context " + show_ctx(u));
    }
    case RTermKind::Hole: fail("cannot infer a hole", s.span(), "a hole may only stand where its value is determined");
    case RTermKind::Id: {
      const Tree* t = tree_of(u);
      if (!t || !tree::is_linear(*t))
        fail("'id' needs a disc context", s.span(), "the context here is " + show_ctx(u));
      const std::size_t n = tree::height(*t);
      return {Term::id(n), core::standard_type(*t, n + 1)};
    }
    case RTermKind::Comp: {
      const Tree* t = tree_of(u);
      if (!t) fail("'comp' needs a tree context", s.span(), "the context here is " + show_ctx(u));
      if (t->children.empty()) fail("'comp' needs a tree of positive dimension", s.span(), "the tree here is []");
      return {Term::comp(*t), core::standard_type(*t, tree::height(*t))};
    }
    case RTermKind::Susp: {
      const Tree* t = tree_of(u);
      if (t && t->children.size() == 1) {
        const Ctx inner = surface::desuspend(u);
        const Checked c = check_term(*s->inner, inner, sig);
        return {Term::susp(c.term), Type::susp(c.type)};
      }
      return via_infer(s, u, sig);
    }
    case RTermKind::Inc: {
      const auto* tc = std::get_if<TreeCtx>(&u);
      if (!tc) fail("an inclusion needs a tree context", s.span(), "the context here is " + show_ctx(u));
      if (s->n > s->m || s->m > tc->tree.children.size())
        fail("inclusion outside the tree", s.span(),
             "the tree has " + std::to_string(tc->tree.children.size()) + " branches");
      const Ctx seg = surface::segment(*tc, s->n, s->m);
      const Checked c = check_term(*s->inner, seg, sig);
      const Tree& st = std::get<TreeCtx>(seg).tree;
      const std::size_t n = s->n;
      core::Label incl = core::label_of(tree::tabulate<Term>(st, [n](const Path& q) {
        Path p = q;
        p[0] += n;
        return core::path(p);
      }));
      return {Term::inc(s->n, s->m, c.term), Type::app_label(c.type, incl)};
    }
    case RTermKind::Coh: return via_infer(s, u, sig);
    case RTermKind::App: return check_app(s, u, sig);
  }
  fail("unknown term", s.span());
}

CheckedType check_type(const RawType& a, const Ctx& u, const Signature& sig) {
  const auto& cfg = sig.config();
  switch (a.kind()) {
    case RTypeKind::Star: return {Type::star(), {}};
    case RTypeKind::Hole: fail("cannot infer a type hole", a.span(), "give the type");
    case RTypeKind::Arrow: {
      const Checked src = check_term(*a->src, u, sig);
      const Checked tgt = check_term(*a->tgt, u, sig);
      const NfType b = nf(src.type, u, cfg);
      const NfType c = nf(tgt.type, u, cfg);
      if (a->base) {
        const CheckedType base = check_type(*a->base, u, sig);
        if (base.nf != b)
          fail("source does not have the annotated type", (*a->src).span(),
               "expected " + show_nf(base.nf, u, sig) + ", found " + show_nf(b, u, sig));
        if (base.nf != c)
          fail("target does not have the annotated type", (*a->tgt).span(),
               "expected " + show_nf(base.nf, u, sig) + ", found " + show_nf(c, u, sig));
      }
      if (b != c)
        fail("source and target have different types", a.span(),
             "source has type " + show_nf(b, u, sig) + ", target has type " + show_nf(c, u, sig));
      NfType out;
      out.emplace_back(nf(src.term, u, cfg), nf(tgt.term, u, cfg));
      out.insert(out.end(), b.begin(), b.end());
      return {Type::arrow(src.term, nbe::quote(b), tgt.term), std::move(out)};
    }
    case RTypeKind::Susp: {
      const Tree* t = tree_of(u);
      if (!t || t->children.size() != 1)
        fail("a suspended type needs a suspended tree context", a.span(), "the context here is " + show_ctx(u));
      const CheckedType inner = check_type(*a->base, surface::desuspend(u), sig);
      const Type out = Type::susp(inner.type);
      return {out, nf(out, u, cfg)};
    }
    case RTypeKind::App:
      fail("applying arguments to a type is not supported", a.span(), "write the type out explicitly");
  }
  fail("unknown type", a.span());
}

void check_type_against(const RawType& a, const Ctx& u, const NfType& c, const Signature& sig) {
  if (a.kind() == RTypeKind::Hole) return;
  if (a.kind() == RTypeKind::Arrow) {
    if (c.empty()) fail("type mismatch", a.span(), "expected *, found an arrow type");
    check_term_against(*a->src, u, c[0].first, sig);
    check_term_against(*a->tgt, u, c[0].second, sig);
    if (a->base) check_type_against(*a->base, u, NfType(c.begin() + 1, c.end()), sig);
    return;
  }
  const CheckedType got = check_type(a, u, sig);
  if (got.nf != c)
    fail("type mismatch", a.span(), "expected " + show_nf(c, u, sig) + ", found " + show_nf(got.nf, u, sig));
}

Ctx check_ctx(const RawCtx& g, const Signature& sig) {
  if (const auto* names = std::get_if<surface::NameTree>(&g.ctx)) {
    check_names(*names, g.span);
    return TreeCtx{tree::shape(*names), *names};
  }
  FlatCtx out;
  for (const auto& e : std::get<std::vector<surface::RawCtxEntry>>(g.ctx)) {
    for (const auto& n : out.names)
      if (n == e.name) fail("duplicate variable name '" + e.name + "'", e.span, "'" + e.name + "' is bound twice");
    const CheckedType a = check_type(e.type, out, sig);
    out.names.push_back(e.name);
    out.types.push_back(a.type);
  }
  return out;
}

core::Sub check_sub(const RawArgs& sigma, const FlatCtx& g, const Ctx& u, const Signature& sig, const Span& at) {
  const auto& cfg = sig.config();
  if (sigma.terms.size() != g.types.size())
    fail("expected " + std::to_string(g.types.size()) + " arguments, found " + std::to_string(sigma.terms.size()),
         at.synthetic() ? sigma.span : at, "wrong number of arguments");
  if (g.types.empty()) {
    if (!sigma.ty) return core::Sub{};
    const CheckedType a = check_type(*sigma.ty, u, sig);
    return core::Sub{a.type, {}};
  }
  std::vector<Checked> cs;
  cs.reserve(sigma.terms.size());
  for (const auto& s : sigma.terms) cs.push_back(check_term(s, u, sig));
  const NfType b0 = nf(cs[0].type, u, cfg);
  std::vector<NfTerm> items;
  items.reserve(cs.size());
  for (const auto& c : cs) items.push_back(nf(c.term, u, cfg));
  const nbe::Env rho{items, b0};
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const NfType want = nbe::eval(g.types[i], rho, cfg);
    const NfType got = i == 0 ? b0 : nf(cs[i].type, u, cfg);
    if (want != got)
      fail("argument has the wrong type", sigma.terms[i].span(),
           "expected " + show_nf(want, u, sig) + ", found " + show_nf(got, u, sig));
  }
  if (sigma.ty) check_type_against(*sigma.ty, u, b0, sig);
  core::Sub out{nbe::quote(b0), {}};
  for (auto& c : cs) out.terms.push_back(std::move(c.term));
  return out;
}

CheckedLabel check_label(const RawArgs& l, const Ctx& u, const Signature& sig) {
  LabelResult r = check_label_rec(l.label, u, sig, l.span);
  if (l.ty) check_type_against(*l.ty, u, r.ty, sig);
  return {core::Label{std::move(r.terms), nbe::quote(r.ty)}, std::move(r.ty)};
}

bool support_check(const Tree& t, const NfType& c, ps::OpSet ops) {
  if (c.empty()) return false;
  const flat::Ctx g = tree::to_ctx(t);
  const core::Scope sc = core::Scope::tree(t);
  const flat::VarSet src = flat::support(g, nbe::flatten(c[0].first, sc));
  const flat::VarSet tgt = flat::support(g, nbe::flatten(c[0].second, sc));
  return ps::op_allowed(ops, g, src, tgt);
}

}  // namespace catt::tc
