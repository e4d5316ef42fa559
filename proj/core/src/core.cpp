#include "catt/core.hpp"

#include "catt/standard.hpp"

namespace catt::core {

namespace {

bool node_equal(const TermNode& a, const TermNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Var: return a.pos == b.pos;
    case TermKind::TopLvl: return a.name == b.name && *a.inner == *b.inner;
    case TermKind::Coh: return a.tree == b.tree && a.type == b.type;
    case TermKind::Id: return a.n == b.n;
    case TermKind::Comp: return a.tree == b.tree;
    case TermKind::Inc: return a.n == b.n && a.m == b.m && *a.inner == *b.inner;
    case TermKind::AppSub: return a.sub == b.sub && *a.inner == *b.inner;
    case TermKind::AppLabel: return a.label == b.label && *a.inner == *b.inner;
    case TermKind::Susp: return *a.inner == *b.inner;
  }
  return false;
}

const std::shared_ptr<const TermNode>& level_zero() {
  static const auto n = std::make_shared<const TermNode>();
  return n;
}

}  // namespace

Term::Term() : n_(level_zero()) {}

Term Term::var(Pos p) {
  auto n = std::make_shared<TermNode>();
  n->pos = std::move(p);
  return Term(std::move(n));
}

Term Term::top_lvl(std::string name, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::TopLvl;
  n->name = std::move(name);
  n->inner = std::move(body);
  return Term(std::move(n));
}

Term Term::coh(Tree t, Type a) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Coh;
  n->tree = std::move(t);
  n->type = std::move(a);
  return Term(std::move(n));
}

Term Term::id(std::size_t d) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Id;
  n->n = d;
  return Term(std::move(n));
}

Term Term::comp(Tree t) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Comp;
  n->tree = std::move(t);
  return Term(std::move(n));
}

Term Term::inc(std::size_t from, std::size_t to, Term inner) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Inc;
  n->n = from;
  n->m = to;
  n->inner = std::move(inner);
  return Term(std::move(n));
}

Term Term::app_sub(Term inner, Sub s) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::AppSub;
  n->inner = std::move(inner);
  n->sub = std::move(s);
  return Term(std::move(n));
}

Term Term::app_label(Term inner, Label l) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::AppLabel;
  n->inner = std::move(inner);
  n->label = std::move(l);
  return Term(std::move(n));
}

Term Term::susp(Term inner) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Susp;
  n->inner = std::move(inner);
  return Term(std::move(n));
}

TermKind Term::kind() const { return n_->kind; }

bool operator==(const Term& a, const Term& b) { return a.n_ == b.n_ || node_equal(*a.n_, *b.n_); }

Type Type::arrow(Term src, Type base, Term tgt) {
  auto n = std::make_shared<TypeNode>();
  n->src = std::move(src);
  n->base = std::move(base);
  n->tgt = std::move(tgt);
  return Type(std::move(n));
}

Type Type::app_sub(Type inner, Sub s) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::AppSub;
  n->base = std::move(inner);
  n->sub = std::move(s);
  return Type(std::move(n));
}

Type Type::app_label(Type inner, Label l) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::AppLabel;
  n->base = std::move(inner);
  n->label = std::move(l);
  return Type(std::move(n));
}

Type Type::susp(Type inner) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Susp;
  n->base = std::move(inner);
  return Type(std::move(n));
}

TypeKind Type::kind() const { return n_ ? n_->kind : TypeKind::Star; }

bool operator==(const Type& a, const Type& b) {
  if (a.n_ == b.n_) return true;
  if (!a.n_ || !b.n_) return false;
  const TypeNode& x = *a.n_;
  const TypeNode& y = *b.n_;
  if (x.kind != y.kind || !(x.base == y.base)) return false;
  switch (x.kind) {
    case TypeKind::Arrow: return *x.src == *y.src && *x.tgt == *y.tgt;
    case TypeKind::AppSub: return x.sub == y.sub;
    case TypeKind::AppLabel: return x.label == y.label;
    default: return true;
  }
}

TreeCtx unnamed(const Tree& t) {
  return TreeCtx{t, tree::tabulate<std::optional<std::string>>(t, [](const Path&) { return std::nullopt; })};
}

std::size_t ctx_size(const Ctx& c) {
  if (const auto* f = std::get_if<FlatCtx>(&c)) return f->types.size();
  return tree::paths(std::get<TreeCtx>(c).tree).size();
}

bool is_tree(const Ctx& c) { return std::holds_alternative<TreeCtx>(c); }

std::optional<std::string> name_of(const Ctx& c, const Pos& p) {
  if (const auto* f = std::get_if<FlatCtx>(&c)) {
    const auto* l = std::get_if<Level>(&p);
    if (!l || *l >= f->names.size() || f->names[*l].empty()) return std::nullopt;
    return f->names[*l];
  }
  const auto* q = std::get_if<Path>(&p);
  const auto& t = std::get<TreeCtx>(c);
  if (!q || !tree::valid_path(t.tree, *q)) return std::nullopt;
  return tree::at(t.names, *q);
}

std::optional<Pos> lookup(const Ctx& c, const std::string& name) {
  if (const auto* f = std::get_if<FlatCtx>(&c)) {
    for (std::size_t i = f->names.size(); i-- > 0;)
      if (f->names[i] == name) return Pos{Level{i}};
    for (std::size_t i = 0; i < f->names.size(); ++i)
      if (f->names[i].empty() && to_name(Pos{Level{i}}) == name) return Pos{Level{i}};
    return std::nullopt;
  }
  const auto& t = std::get<TreeCtx>(c);
  const auto ps = tree::paths(t.tree);
  for (const auto& p : ps) {
    const auto& n = tree::at(t.names, p);
    if (n && *n == name) return Pos{p};
  }
  // Unnamed positions answer to their positional name.
  for (const auto& p : ps)
    if (!tree::at(t.names, p) && to_name(Pos{p}) == name) return Pos{p};
  return std::nullopt;
}

std::string to_name(const Pos& p) {
  if (const auto* l = std::get_if<Level>(&p)) return "v" + std::to_string(*l);
  const auto& q = std::get<Path>(p);
  bool small = true;
  for (auto i : q)
    if (i >= 10) small = false;
  std::string r = "p";
  for (auto i : q) r += (small ? "" : "_") + std::to_string(i);
  return r;
}

Term path(Path p) { return Term::var(Pos{std::move(p)}); }

Label identity_label(const Tree& t) {
  return Label{tree::tabulate<Term>(t, [](const Path& p) { return path(p); }), Type::star()};
}

Label label_of(tree::Labelled<Term> l, Type ty) { return Label{std::move(l), std::move(ty)}; }

Label paths_label(const tree::Labelled<Path>& l) {
  return Label{tree::map_labelled<Term>(l, [](const Path& p) { return path(p); }), Type::star()};
}

std::size_t Scope::length() const {
  if (const auto* n = std::get_if<std::size_t>(&of)) return *n;
  return tree::paths(std::get<Tree>(of)).size();
}

namespace {

const Tree& scope_tree(const Scope& s) {
  const auto* t = std::get_if<Tree>(&s.of);
  if (!t) throw flat::malformed("path-positioned syntax over a flat scope");
  return *t;
}

// The scope of the syntax under a Σ.
Scope unsuspend(const Scope& s) {
  if (const auto* t = std::get_if<Tree>(&s.of)) {
    if (t->children.size() != 1) throw flat::malformed("suspension over a tree that is not a suspension");
    return Scope::tree(t->children[0]);
  }
  const std::size_t n = std::get<std::size_t>(s.of);
  if (n < 2) throw flat::malformed("suspension over a context that is too short");
  return Scope::flat(n - 2);
}

Tree segment(const Tree& t, std::size_t n, std::size_t m) {
  if (n > m || m > t.children.size()) throw flat::malformed("inclusion outside the tree");
  Tree r;
  r.children.assign(t.children.begin() + static_cast<long>(n), t.children.begin() + static_cast<long>(m));
  return r;
}

flat::Sub inclusion_sub(const Tree& t, std::size_t n, std::size_t m) {
  const Tree seg = segment(t, n, m);
  const auto l = tree::map_labelled<Path>(tree::identity_paths(seg), [n](const Path& p) {
    Path q = p;
    q[0] += n;
    return q;
  });
  return tree::paths_to_sub(l, t);
}

}  // namespace

flat::Term flatten_core(const Term& t, const Scope& s) {
  switch (t.kind()) {
    case TermKind::Var: {
      if (const auto* l = std::get_if<Level>(&t->pos)) {
        const std::size_t n = s.length();
        if (*l >= n) throw flat::malformed("level outside scope");
        return flat::Term::var(flat::index_of(n, *l));
      }
      return tree::path_var(scope_tree(s), std::get<Path>(t->pos));
    }
    case TermKind::TopLvl: return flatten_core(*t->inner, s);
    case TermKind::Coh: {
      const flat::Ctx g = tree::to_ctx(t->tree);
      return flat::Term::coh(g, flatten_core(t->type, Scope::tree(t->tree)), flat::identity_sub(g));
    }
    case TermKind::Id: {
      const flat::Ctx g = flat::disc(t->n);
      const flat::Type a = flat::Type::arrow(flat::Term::var(0), flat::weaken(flat::sphere_type(t->n)), flat::Term::var(0));
      return flat::Term::coh(g, a, flat::identity_sub(g));
    }
    case TermKind::Comp: {
      const flat::Ctx g = tree::to_ctx(t->tree);
      const Type u = standard_type(t->tree, tree::height(t->tree));
      return flat::Term::coh(g, flatten_core(u, Scope::tree(t->tree)), flat::identity_sub(g));
    }
    case TermKind::Inc: {
      const Tree& whole = scope_tree(s);
      const flat::Term inner = flatten_core(*t->inner, Scope::tree(segment(whole, t->n, t->m)));
      return flat::substitute(inner, inclusion_sub(whole, t->n, t->m));
    }
    case TermKind::AppSub: {
      const flat::Term inner = flatten_core(*t->inner, Scope::flat(t->sub.terms.size()));
      return flat::substitute(inner, flatten_core(t->sub, s));
    }
    case TermKind::AppLabel: {
      const flat::Term inner = flatten_core(*t->inner, Scope::tree(tree::shape(t->label.tree)));
      return flat::substitute(inner, flatten_core(t->label, s));
    }
    case TermKind::Susp: {
      const Scope in = unsuspend(s);
      return flat::suspend(flatten_core(*t->inner, in), in.length());
    }
  }
  throw flat::malformed("unknown term");
}

flat::Type flatten_core(const Type& a, const Scope& s) {
  switch (a.kind()) {
    case TypeKind::Star: return flat::Type::star();
    case TypeKind::Arrow:
      return flat::Type::arrow(flatten_core(*a->src, s), flatten_core(a->base, s), flatten_core(*a->tgt, s));
    case TypeKind::AppSub:
      return flat::substitute(flatten_core(a->base, Scope::flat(a->sub.terms.size())), flatten_core(a->sub, s));
    case TypeKind::AppLabel:
      return flat::substitute(flatten_core(a->base, Scope::tree(tree::shape(a->label.tree))),
                              flatten_core(a->label, s));
    case TypeKind::Susp: {
      const Scope in = unsuspend(s);
      return flat::suspend(flatten_core(a->base, in), in.length());
    }
  }
  throw flat::malformed("unknown type");
}

flat::Sub flatten_core(const Sub& s, const Scope& sc) {
  flat::Sub r;
  r.ty = flatten_core(s.ty, sc);
  r.terms.reserve(s.terms.size());
  for (const auto& t : s.terms) r.terms.push_back(flatten_core(t, sc));
  return r;
}

flat::Sub flatten_core(const Label& l, const Scope& sc) {
  const auto terms = tree::map_labelled<flat::Term>(l.tree, [&](const Term& t) { return flatten_core(t, sc); });
  return tree::label_to_sub(terms, flatten_core(l.ty, sc));
}

flat::Term flatten_core(const Term& t, const Tree& t_scope) { return flatten_core(t, Scope::tree(t_scope)); }
flat::Type flatten_core(const Type& a, const Tree& t_scope) { return flatten_core(a, Scope::tree(t_scope)); }

Term from_flat(const flat::Term& t, const Scope& s) {
  const std::size_t n = s.length();
  if (t.is_var()) {
    if (t.index() >= n) throw flat::malformed("variable outside scope");
    const std::size_t l = flat::level_of(n, t.index());
    if (const auto* tr = std::get_if<Tree>(&s.of)) return path(tree::paths(*tr)[l]);
    return Term::var(Pos{Level{l}});
  }
  Tree head;
  if (!tree::from_ctx(t.ctx(), head)) throw flat::malformed("coherence over a context that is not a ps-context");
  const Type a = from_flat(t.type(), Scope::tree(head));
  const auto entries = tree::label_from_sub(head, t.sub());
  Label l{tree::map_labelled<Term>(entries, [&](const flat::Term& u) { return from_flat(u, s); }), Type::star()};
  return Term::app_label(Term::coh(head, a), std::move(l));
}

Type from_flat(const flat::Type& a, const Scope& s) {
  if (a.is_star()) return Type::star();
  return Type::arrow(from_flat(a.src(), s), from_flat(a.base(), s), from_flat(a.tgt(), s));
}

namespace {

std::string show_pos(const Pos& p) {
  if (const auto* l = std::get_if<Level>(&p)) return "l" + std::to_string(*l);
  return tree::show(std::get<Path>(p));
}

template <class X, class F>
std::string show_labelled(const tree::Labelled<X>& l, F&& f) {
  std::string r = f(l.elems[0]);
  for (std::size_t i = 0; i < l.branches.size(); ++i)
    r += "{" + show_labelled(l.branches[i], f) + "}" + f(l.elems[i + 1]);
  return r;
}

}  // namespace

std::string show(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return show_pos(t->pos);
    case TermKind::TopLvl: return t->name;
    case TermKind::Coh: return "coh[" + tree::show(t->tree) + " : " + show(t->type) + "]";
    case TermKind::Id: return "id" + std::to_string(t->n);
    case TermKind::Comp: return "comp" + tree::show(t->tree);
    case TermKind::Inc: return "inc<" + std::to_string(t->n) + "-" + std::to_string(t->m) + ">(" + show(*t->inner) + ")";
    case TermKind::AppSub: {
      std::string r = show(*t->inner) + "(";
      if (!t->sub.ty.is_star()) r += show(t->sub.ty) + " | ";
      for (std::size_t i = 0; i < t->sub.terms.size(); ++i) r += (i ? ", " : "") + show(t->sub.terms[i]);
      return r + ")";
    }
    case TermKind::AppLabel: {
      std::string r = show(*t->inner) + "<";
      if (!t->label.ty.is_star()) r += show(t->label.ty) + " | ";
      return r + show_labelled(t->label.tree, [](const Term& u) { return show(u); }) + ">";
    }
    case TermKind::Susp: return "S(" + show(*t->inner) + ")";
  }
  return "?";
}

std::string show(const Type& a) {
  switch (a.kind()) {
    case TypeKind::Star: return "*";
    case TypeKind::Arrow: return "(" + show(*a->src) + " ->[" + show(a->base) + "] " + show(*a->tgt) + ")";
    case TypeKind::AppSub: return "(" + show(a->base) + ")(sub)";
    case TypeKind::AppLabel: return "(" + show(a->base) + ")<label>";
    case TypeKind::Susp: return "S(" + show(a->base) + ")";
  }
  return "?";
}

}  // namespace catt::core
