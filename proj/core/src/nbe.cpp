#include "catt/nbe.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "catt/standard.hpp"

namespace catt::nbe {

namespace {

constexpr std::size_t kMaxInsertions = 100000;

const std::shared_ptr<const NfNode>& level_zero() {
  static const auto n = std::make_shared<const NfNode>();
  return n;
}

Tree suspend_n(Tree t, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) t = tree::suspend(t);
  return t;
}

core::Type susp_n(core::Type a, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i) a = core::Type::susp(std::move(a));
  return a;
}

NfLabel disc_label(const NfType& highest_first, NfTerm top) {
  const std::vector<std::pair<NfTerm, NfTerm>> lowest_first(highest_first.rbegin(), highest_first.rend());
  return tree::disc_labelling(lowest_first, std::move(top));
}

}  // namespace

std::string show(const EvalConfig& c) {
  std::string r = "dr=";
  r += c.disc_removal ? "on" : "off";
  r += " ecr=";
  r += c.endo_coherence_removal ? "on" : "off";
  r += " insertion=";
  r += c.insertion == Insertion::None ? "none" : c.insertion == Insertion::Identities ? "id" : "full";
  r += " ops=";
  r += c.ops == ps::OpSet::Regular ? "regular" : "groupoidal";
  return r;
}

NfTerm::NfTerm() : n_(level_zero()) {}

NfTerm NfTerm::var(Pos p) {
  auto n = std::make_shared<NfNode>();
  n->pos = std::move(p);
  return NfTerm(std::move(n));
}

NfTerm NfTerm::apply(const Head& h, NfLabel l) {
  auto n = std::make_shared<NfNode>();
  n->is_var = false;
  n->head = h;
  n->label = std::move(l);
  return NfTerm(std::move(n));
}

bool NfTerm::is_var() const { return n_->is_var; }

bool operator==(const NfTerm& a, const NfTerm& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->is_var != b.n_->is_var) return false;
  if (a.n_->is_var) return a.n_->pos == b.n_->pos;
  return a.n_->head == b.n_->head && a.n_->label == b.n_->label;
}

Tree Head::domain() const {
  if (kind == HeadKind::Id) return tree::disc_tree(n);
  return tree;
}

NfTerm Env::at(const Pos& p) const {
  if (const auto* l = std::get_if<core::Level>(&p)) {
    const auto* v = std::get_if<std::vector<NfTerm>>(&items);
    if (!v || *l >= v->size()) throw eval_error("level outside environment");
    return (*v)[*l];
  }
  const auto* lab = std::get_if<NfLabel>(&items);
  if (!lab) throw eval_error("path lookup in a level environment");
  return tree::at(*lab, std::get<Path>(p));
}

Env restrict_env(const Env& r) {
  Env out;
  if (const auto* v = std::get_if<std::vector<NfTerm>>(&r.items)) {
    if (v->size() < 2) throw eval_error("restricting a short environment");
    out.ty.emplace_back((*v)[0], (*v)[1]);
    out.items = std::vector<NfTerm>(v->begin() + 2, v->end());
  } else {
    const NfLabel& l = r.label();
    if (l.branches.size() != 1) throw eval_error("restricting an environment that is not a suspension");
    out.ty.emplace_back(l.elems[0], l.elems[1]);
    out.items = l.branches[0];
  }
  out.ty.insert(out.ty.end(), r.ty.begin(), r.ty.end());
  return out;
}

NfLabel down_env(const Env& r) {
  NfLabel l = r.label();
  for (const auto& [s, t] : r.ty) {
    NfLabel w;
    w.elems = {s, t};
    w.branches.push_back(std::move(l));
    l = std::move(w);
  }
  return l;
}

Env include_env(const Env& r, std::size_t n, std::size_t m) {
  const NfLabel& l = r.label();
  if (n > m || m > l.branches.size()) throw eval_error("inclusion outside environment");
  NfLabel out;
  out.elems.assign(l.elems.begin() + static_cast<long>(n), l.elems.begin() + static_cast<long>(m) + 1);
  out.branches.assign(l.branches.begin() + static_cast<long>(n), l.branches.begin() + static_cast<long>(m));
  return Env{std::move(out), r.ty};
}

Env id_env(const Tree& t) {
  return Env{tree::tabulate<NfTerm>(t, [](const Path& p) { return NfTerm::var(Pos{p}); }), {}};
}

Env id_env(std::size_t n) {
  std::vector<NfTerm> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(NfTerm::var(Pos{core::Level{i}}));
  return Env{std::move(v), {}};
}

Env id_env(const core::Ctx& c) {
  if (const auto* t = std::get_if<core::TreeCtx>(&c)) return id_env(t->tree);
  return id_env(std::get<core::FlatCtx>(c).types.size());
}

namespace {

struct NfCache {
  std::mutex mu;
  std::unordered_map<std::string, NfType> types;
};

NfCache& nf_cache() {
  static NfCache c;
  return c;
}

bool is_disc(const Tree& s) { return tree::is_linear(s); }

bool is_id_type(const NfType& b, const Tree& s, const EvalConfig& cfg) {
  if (!is_disc(s)) return false;
  const std::size_t n = tree::height(s);
  if (b.size() != n + 1) return false;
  const NfTerm top = NfTerm::var(Pos{tree::max_disc_path(n)});
  if (!(b[0].first == top) || !(b[0].second == top)) return false;
  const NfType u = standard_nf(s, n, cfg);
  return std::equal(b.begin() + 1, b.end(), u.begin(), u.end());
}

NfTerm eval_coh(const Tree& s0, const core::Type& a0, const Env& r, const EvalConfig& cfg, bool standard) {
  const std::size_t d = r.ty.size();
  NfLabel l = down_env(r);
  Tree s = suspend_n(s0, d);
  core::Type a = susp_n(a0, d);

  std::optional<NfType> b;
  auto compute_b = [&]() -> const NfType& {
    if (!b) b = standard ? standard_nf(s, tree::height(s), cfg) : eval(a, id_env(s), cfg);
    return *b;
  };

  if (tree::is_linear(s)) {
    const std::size_t n = tree::height(s);
    const NfType& bb = compute_b();
    if (is_id_type(bb, s, cfg)) return NfTerm::apply(Head::id(n), std::move(l));
    if (bb == standard_nf(s, n, cfg)) {
      if (cfg.disc_removal) return tree::at(l, tree::max_disc_path(n));
      return NfTerm::apply(Head::comp(s), std::move(l));
    }
  }

  std::size_t steps = 0;
  while (auto redex = find_insertion_redex(s, l, cfg)) {
    if (++steps > kMaxInsertions) throw eval_error("insertion did not terminate");
    const core::Label kappa = tree::exterior_label(s, redex->branch, redex->inner);
    l = tree::insert_label(l, redex->branch, redex->inner_label);
    s = tree::insert_tree(s, redex->branch, redex->inner);
    a = core::Type::app_label(std::move(a), kappa);
    standard = false;
    b.reset();
  }

  const NfType& bb = compute_b();
  if (is_id_type(bb, s, cfg)) return NfTerm::apply(Head::id(tree::height(s)), std::move(l));
  if (cfg.endo_coherence_removal && !bb.empty() && bb[0].first == bb[0].second) {
    const Env le{l, {}};
    const NfType lower(bb.begin() + 1, bb.end());
    const NfType lower_l = eval(quote(lower), le, cfg);
    const NfTerm top_l = eval(quote(bb[0].first), le, cfg);
    return NfTerm::apply(Head::id(lower.size()), disc_label(lower_l, top_l));
  }
  const std::size_t h = tree::height(s);
  if (cfg.disc_removal && is_disc(s) && bb == standard_nf(s, h, cfg)) return tree::at(l, tree::max_disc_path(h));
  if (bb == standard_nf(s, h, cfg)) return NfTerm::apply(Head::comp(s), std::move(l));
  return NfTerm::apply(Head::coh(s, bb), std::move(l));
}

}  // namespace

NfType standard_nf(const Tree& t, std::size_t n, const EvalConfig& cfg) {
  const std::string key = tree::show(t) + "/" + std::to_string(n) + "/" + show(cfg);
  auto& c = nf_cache();
  {
    std::lock_guard<std::mutex> g(c.mu);
    if (auto it = c.types.find(key); it != c.types.end()) return it->second;
  }
  NfType r = eval(core::standard_type(t, n), id_env(t), cfg);
  std::lock_guard<std::mutex> g(c.mu);
  c.types.emplace(key, r);
  return r;
}

std::optional<Redex> find_insertion_redex(const Tree& s, const NfLabel& l, const EvalConfig& cfg) {
  if (cfg.insertion == Insertion::None) return std::nullopt;
  for (const auto& p : tree::max_paths(s)) {
    const NfTerm& e = tree::at(l, p);
    if (e.is_var()) continue;
    const Head& h = e->head;
    Tree inner;
    if (h.kind == HeadKind::Id) {
      inner = tree::disc_tree(h.n);
    } else if (h.kind == HeadKind::Comp && cfg.insertion == Insertion::Full && !tree::is_linear(h.tree)) {
      inner = h.tree;
    } else {
      continue;
    }
    for (const auto& br : tree::branches_for(s, p)) {
      if (tree::insertion_point(s, br, inner)) return Redex{br, inner, e->label};
    }
  }
  return std::nullopt;
}

NfTerm eval(const core::Term& t, const Env& r, const EvalConfig& cfg) {
  using core::TermKind;
  switch (t.kind()) {
    case TermKind::Var: return r.at(t->pos);
    case TermKind::TopLvl: return eval(*t->inner, r, cfg);
    case TermKind::Coh: return eval_coh(t->tree, t->type, r, cfg, false);
    case TermKind::Id: return NfTerm::apply(Head::id(t->n + r.ty.size()), down_env(r));
    case TermKind::Comp:
      return eval_coh(t->tree, core::standard_type(t->tree, tree::height(t->tree)), r, cfg, true);
    case TermKind::Inc: return eval(*t->inner, include_env(r, t->n, t->m), cfg);
    case TermKind::AppSub: return eval(*t->inner, eval(t->sub, r, cfg), cfg);
    case TermKind::AppLabel: return eval(*t->inner, eval(t->label, r, cfg), cfg);
    case TermKind::Susp: return eval(*t->inner, restrict_env(r), cfg);
  }
  throw eval_error("unknown term");
}

NfType eval(const core::Type& a, const Env& r, const EvalConfig& cfg) {
  using core::TypeKind;
  switch (a.kind()) {
    case TypeKind::Star: return r.ty;
    case TypeKind::Arrow: {
      NfType out;
      out.emplace_back(eval(*a->src, r, cfg), eval(*a->tgt, r, cfg));
      NfType base = eval(a->base, r, cfg);
      out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    case TypeKind::AppSub: return eval(a->base, eval(a->sub, r, cfg), cfg);
    case TypeKind::AppLabel: return eval(a->base, eval(a->label, r, cfg), cfg);
    case TypeKind::Susp: return eval(a->base, restrict_env(r), cfg);
  }
  throw eval_error("unknown type");
}

Env eval(const core::Sub& s, const Env& r, const EvalConfig& cfg) {
  std::vector<NfTerm> v;
  v.reserve(s.terms.size());
  for (const auto& t : s.terms) v.push_back(eval(t, r, cfg));
  return Env{std::move(v), eval(s.ty, r, cfg)};
}

Env eval(const core::Label& l, const Env& r, const EvalConfig& cfg) {
  return Env{tree::map_labelled<NfTerm>(l.tree, [&](const core::Term& t) { return eval(t, r, cfg); }),
             eval(l.ty, r, cfg)};
}

core::Term quote(const Head& h) {
  switch (h.kind) {
    case HeadKind::Coh: return core::Term::coh(h.tree, quote(h.type));
    case HeadKind::Id: return core::Term::id(h.n);
    case HeadKind::Comp: return core::Term::comp(h.tree);
  }
  throw eval_error("unknown head");
}

core::Term quote(const NfTerm& t) {
  if (t.is_var()) return core::Term::var(t->pos);
  return core::Term::app_label(quote(t->head), quote(t->label));
}

core::Type quote(const NfType& a) {
  core::Type r = core::Type::star();
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = core::Type::arrow(quote(it->first), r, quote(it->second));
  return r;
}

core::Label quote(const NfLabel& l) {
  return core::Label{tree::map_labelled<core::Term>(l, [](const NfTerm& t) { return quote(t); }), core::Type::star()};
}

std::size_t size(const NfTerm& t) {
  if (t.is_var()) return 0;
  const Head& h = t->head;
  const std::size_t head = h.kind == HeadKind::Coh ? 1 + size(h.type) : 1;
  return head + size(t->label);
}

std::size_t size(const NfType& a) {
  std::size_t r = 0;
  for (const auto& [s, t] : a) r += size(s) + size(t);
  return r;
}

std::size_t size(const NfLabel& l) {
  std::size_t r = 0;
  for (const auto& e : l.elems) r += size(e);
  for (const auto& b : l.branches) r += size(b);
  return r;
}

flat::Term flatten(const NfTerm& t, const core::Scope& s) { return core::flatten_core(quote(t), s); }
flat::Type flatten(const NfType& a, const core::Scope& s) { return core::flatten_core(quote(a), s); }

bool is_iterated_identity(const NfTerm& t) {
  if (t.is_var()) return true;
  if (t->head.kind != HeadKind::Id) return false;
  const std::size_t k = t->head.n;
  if (!(tree::shape(t->label) == tree::disc_tree(k))) return false;
  return is_iterated_identity(tree::at(t->label, tree::max_disc_path(k)));
}

std::string show(const NfTerm& t) { return core::show(quote(t)); }
std::string show(const NfType& a) { return core::show(quote(a)); }

}  // namespace catt::nbe
