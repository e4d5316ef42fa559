#include <functional>

#include "catt/surface.hpp"

namespace catt::surface {

namespace {

template <class X>
bool all_empty(const tree::Labelled<std::optional<X>>& t) {
  for (const auto& e : t.elems)
    if (e) return false;
  return true;
}

template <class X>
std::string print_tree(const tree::Labelled<std::optional<X>>& t, const std::function<std::string(const X&)>& elem,
                       bool top_square, const std::string& suffix = {}) {
  if (top_square && all_empty(t)) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.branches.size(); ++i) {
      if (i) out += ", ";
      out += print_tree<X>(t.branches[i], elem, true);
    }
    return out + suffix + "]";
  }
  std::string out = t.elems[0] ? elem(*t.elems[0]) : "";
  for (std::size_t i = 0; i < t.branches.size(); ++i) {
    out += "{" + print_tree<X>(t.branches[i], elem, true) + "}";
    if (t.elems[i + 1]) out += elem(*t.elems[i + 1]);
  }
  return out + suffix;
}

std::string type_suffix(const std::optional<RawType>& ty) { return ty ? " : " + pretty(*ty) : ""; }

}  // namespace

std::string pretty(const RawTerm& t) {
  switch (t.kind()) {
    case RTermKind::Name: return t->name;
    case RTermKind::Hole: return "_";
    case RTermKind::Id: return "id";
    case RTermKind::Comp: return "comp";
    case RTermKind::Coh: return "coh [" + pretty(t->ctx) + " : " + pretty(*t->type) + "]";
    case RTermKind::Inc:
      return "inc⟨" + std::to_string(t->n) + "-" + std::to_string(t->m) + "⟩(" + pretty(*t->inner) + ")";
    case RTermKind::App: return pretty(*t->inner) + pretty(*t->args);
    case RTermKind::Susp: return "S(" + pretty(*t->inner) + ")";
  }
  return {};
}

std::string pretty(const RawArgs& a) {
  const std::function<std::string(const RawTerm&)> elem = [](const RawTerm& t) { return pretty(t); };
  switch (a.form) {
    case RawArgs::Form::Sub: {
      std::string out = "(";
      for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (i) out += ", ";
        out += pretty(a.terms[i]);
      }
      return out + type_suffix(a.ty) + ")";
    }
    case RawArgs::Form::Square:
      if (all_empty(a.label)) return print_tree<RawTerm>(a.label, elem, true, type_suffix(a.ty));
      [[fallthrough]];
    case RawArgs::Form::Full: return "⟨" + print_tree<RawTerm>(a.label, elem, false, type_suffix(a.ty)) + "⟩";
  }
  return {};
}

std::string pretty(const RawType& a) {
  switch (a.kind()) {
    case RTypeKind::Star: return "*";
    case RTypeKind::Hole: return "_";
    case RTypeKind::Arrow: {
      std::string core = pretty(*a->src) + " -> " + pretty(*a->tgt);
      return a->base ? pretty(*a->base) + " | " + core : core;
    }
    case RTypeKind::App: return "(" + pretty(*a->base) + ")" + pretty(*a->args);
    case RTypeKind::Susp: return "S(" + pretty(*a->base) + ")";
  }
  return {};
}

std::string pretty(const NameTree& t) {
  const std::function<std::string(const std::string&)> elem = [](const std::string& s) { return s; };
  return print_tree<std::string>(t, elem, true);
}

std::string pretty(const RawCtx& c) {
  if (const auto* t = std::get_if<NameTree>(&c.ctx)) return pretty(*t);
  std::string out;
  for (const auto& e : std::get<std::vector<RawCtxEntry>>(c.ctx)) {
    if (!out.empty()) out += " ";
    out += "(" + e.name + " : " + pretty(e.type) + ")";
  }
  return out;
}

std::string pretty(const Command& c) {
  switch (c.kind) {
    case Command::Kind::Def: {
      std::string out = "def " + c.name;
      if (c.ctx) out += " " + pretty(*c.ctx);
      if (c.type) out += " : " + pretty(*c.type);
      return out + " = " + pretty(*c.term);
    }
    case Command::Kind::Normalise: return "normalise " + pretty(*c.term) + " in " + pretty(*c.ctx);
    case Command::Kind::Assert:
      return "assert " + pretty(*c.term) + " = " + pretty(*c.rhs) + " in " + pretty(*c.ctx);
    case Command::Kind::Size: return "size " + pretty(*c.term) + " in " + pretty(*c.ctx);
    case Command::Kind::Import:
      return c.path.find_first_of(" \t\n\"") == std::string::npos ? "import " + c.path : "import \"" + c.path + "\"";
  }
  return {};
}

namespace {

template <class X, class Eq>
bool same_opt(const std::optional<X>& a, const std::optional<X>& b, Eq eq) {
  if (a.has_value() != b.has_value()) return false;
  return !a || eq(*a, *b);
}

template <class X, class Eq>
bool same_tree(const tree::Labelled<X>& a, const tree::Labelled<X>& b, Eq eq) {
  if (a.elems.size() != b.elems.size() || a.branches.size() != b.branches.size()) return false;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    if (!eq(a.elems[i], b.elems[i])) return false;
  for (std::size_t i = 0; i < a.branches.size(); ++i)
    if (!same_tree(a.branches[i], b.branches[i], eq)) return false;
  return true;
}

bool same_term(const RawTerm& a, const RawTerm& b) { return same(a, b); }
bool same_type(const RawType& a, const RawType& b) { return same(a, b); }
bool same_args(const RawArgs& a, const RawArgs& b) { return same(a, b); }

bool same_names(const NameTree& a, const NameTree& b) {
  return same_tree(a, b, [](const auto& x, const auto& y) { return x == y; });
}

}  // namespace

bool same(const RawTerm& a, const RawTerm& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RTermKind::Name: return a->name == b->name;
    case RTermKind::Hole:
    case RTermKind::Id:
    case RTermKind::Comp: return true;
    case RTermKind::Coh: return same_names(a->ctx, b->ctx) && same_opt(a->type, b->type, same_type);
    case RTermKind::Inc: return a->n == b->n && a->m == b->m && same_opt(a->inner, b->inner, same_term);
    case RTermKind::App: return same_opt(a->inner, b->inner, same_term) && same_opt(a->args, b->args, same_args);
    case RTermKind::Susp: return same_opt(a->inner, b->inner, same_term);
  }
  return false;
}

bool same(const RawType& a, const RawType& b) {
  if (a.kind() != b.kind()) return false;
  return same_opt(a->src, b->src, same_term) && same_opt(a->tgt, b->tgt, same_term) &&
         same_opt(a->base, b->base, same_type) && same_opt(a->args, b->args, same_args);
}

bool same(const RawArgs& a, const RawArgs& b) {
  if (a.form != b.form || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!same(a.terms[i], b.terms[i])) return false;
  const auto eq = [](const std::optional<RawTerm>& x, const std::optional<RawTerm>& y) {
    return same_opt(x, y, same_term);
  };
  return same_tree(a.label, b.label, eq) && same_opt(a.ty, b.ty, same_type);
}

bool same(const RawCtx& a, const RawCtx& b) {
  if (a.is_tree() != b.is_tree()) return false;
  if (a.is_tree()) return same_names(std::get<NameTree>(a.ctx), std::get<NameTree>(b.ctx));
  const auto& x = std::get<std::vector<RawCtxEntry>>(a.ctx);
  const auto& y = std::get<std::vector<RawCtxEntry>>(b.ctx);
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].name != y[i].name || !same(x[i].type, y[i].type)) return false;
  return true;
}

bool same(const Command& a, const Command& b) {
  return a.kind == b.kind && a.name == b.name && a.path == b.path &&
         same_opt(a.ctx, b.ctx, [](const RawCtx& x, const RawCtx& y) { return same(x, y); }) &&
         same_opt(a.type, b.type, same_type) && same_opt(a.term, b.term, same_term) &&
         same_opt(a.rhs, b.rhs, same_term);
}

}  // namespace catt::surface
