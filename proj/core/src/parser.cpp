#include <array>
#include <cctype>
#include <functional>

#include "catt/surface.hpp"

namespace catt::surface {

namespace {

enum class Tok {
  Ident,
  Path,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LBrace,
  RBrace,
  LAngle,
  RAngle,
  Comma,
  Colon,
  Equals,
  Bar,
  Arrow,
  Star,
  Minus,
  Sigma,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t start;
  std::size_t end;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::Path: return "path '" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool starts_with(const std::string& s, std::size_t i, const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; }

std::vector<Token> lex(const std::string& s, int source) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, s.substr(i, len), i, i + len});
    i += len;
  };
  struct Sym {
    const char* text;
    Tok kind;
  };
  static const std::array<Sym, 19> syms{{{"->", Tok::Arrow},
                                         {"→", Tok::Arrow},
                                         {"⋆", Tok::Star},
                                         {"Σ", Tok::Sigma},
                                         {"⟨", Tok::LAngle},
                                         {"⟩", Tok::RAngle},
                                         {"(", Tok::LParen},
                                         {")", Tok::RParen},
                                         {"[", Tok::LBrack},
                                         {"]", Tok::RBrack},
                                         {"{", Tok::LBrace},
                                         {"}", Tok::RBrace},
                                         {",", Tok::Comma},
                                         {":", Tok::Colon},
                                         {"=", Tok::Equals},
                                         {"|", Tok::Bar},
                                         {"*", Tok::Star},
                                         {"-", Tok::Minus},
                                         {"∗", Tok::Star}}};
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      push(Tok::Ident, j - i);
      if (out.back().text == "import") {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        if (i < s.size() && s[i] == '"') {
          const std::size_t close = s.find('"', i + 1);
          if (close == std::string::npos) throw Error("unterminated string", Span{i, s.size(), source});
          out.push_back(Token{Tok::Path, s.substr(i + 1, close - i - 1), i, close + 1});
          i = close + 1;
        } else {
          std::size_t k = i;
          while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k]))) ++k;
          if (k > i) push(Tok::Path, k - i);
        }
      }
      continue;
    }
    bool matched = false;
    for (const auto& sym : syms) {
      if (starts_with(s, i, sym.text)) {
        push(sym.kind, std::char_traits<char>::length(sym.text));
        matched = true;
        break;
      }
    }
    if (matched) continue;
    std::size_t len = 1;
    const auto b = static_cast<unsigned char>(c);
    if (b >= 0xF0) len = 4;
    else if (b >= 0xE0) len = 3;
    else if (b >= 0xC0) len = 2;
    throw Error("unexpected character '" + s.substr(i, len) + "'", Span{i, i + len, source}, "not valid here");
  }
  out.push_back(Token{Tok::End, "", s.size(), s.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, int source) : source_(source), toks_(lex(text, source)) {}

  bool done() const { return peek().kind == Tok::End; }

  Command command() {
    const std::size_t start = i_;
    Command c;
    const Token& t = peek();
    if (is_ident("def")) {
      next();
      c.kind = Command::Kind::Def;
      c.name_span = span_of(peek());
      c.name = name("a definition name");
      if (!at(Tok::Equals)) {
        c.ctx = ctx();
        if (at(Tok::Colon)) {
          next();
          c.type = type();
        }
      }
      expect(Tok::Equals, "'='");
      c.term = term();
    } else if (is_ident("normalise")) {
      next();
      c.kind = Command::Kind::Normalise;
      c.term = term();
      expect_ident("in");
      c.ctx = ctx();
    } else if (is_ident("assert")) {
      next();
      c.kind = Command::Kind::Assert;
      c.term = term();
      expect(Tok::Equals, "'='");
      c.rhs = term();
      expect_ident("in");
      c.ctx = ctx();
    } else if (is_ident("size")) {
      next();
      c.kind = Command::Kind::Size;
      c.term = term();
      expect_ident("in");
      c.ctx = ctx();
    } else if (is_ident("import")) {
      next();
      c.kind = Command::Kind::Import;
      if (!at(Tok::Path)) fail("a file path");
      c.path = next().text;
    } else {
      (void)t;
      fail("a command (def, normalise, assert, size or import)");
    }
    c.span = span_from(start);
    return c;
  }

  RawTerm term() {
    const std::size_t start = i_;
    RawTerm t = prefix();
    while (at(Tok::LParen) || at(Tok::LBrack) || at(Tok::LAngle)) {
      RawArgs a = args();
      RawTermNode n;
      n.kind = RTermKind::App;
      n.inner = t;
      n.args = std::move(a);
      n.span = span_from(start);
      t = make_term(std::move(n));
    }
    return t;
  }

  RawType type() {
    const std::size_t start = i_;
    RawType a = type_primary();
    while (at(Tok::Bar)) {
      next();
      RawTerm s = term();
      expect(Tok::Arrow, "'->'");
      RawTerm t = term();
      a = raw_arrow(std::move(s), a, std::move(t), span_from(start));
    }
    return a;
  }

  RawCtx ctx() {
    const std::size_t start = i_;
    RawCtx c;
    if (at(Tok::LParen)) {
      std::vector<RawCtxEntry> entries;
      while (at(Tok::LParen)) {
        const std::size_t e = i_;
        next();
        RawCtxEntry entry{name("a variable name"), raw_star(), {}};
        expect(Tok::Colon, "':'");
        entry.type = type();
        expect(Tok::RParen, "')'");
        entry.span = span_from(e);
        entries.push_back(std::move(entry));
        if (at(Tok::Comma)) next();
      }
      c.ctx = std::move(entries);
    } else {
      c.ctx = name_tree();
    }
    c.span = span_from(start);
    return c;
  }

  void expect_end() {
    if (!done()) fail("end of input");
  }

private:
  int source_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool is_ident(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Ident && peek(k).text == s; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  Span span_of(const Token& t) const { return Span{t.start, t.end, source_}; }
  Span span_from(std::size_t start) const {
    if (i_ == start) return Span{toks_[start].start, toks_[start].start, source_};
    return Span{toks_[start].start, toks_[i_ - 1].end, source_};
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw Error("expected " + expected + ", found " + describe(t), span_of(t), "unexpected " + describe(t));
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return next();
  }

  void expect_ident(const char* s) {
    if (!is_ident(s)) fail(std::string("'") + s + "'");
    next();
  }

  std::string name(const char* what) {
    if (!at(Tok::Ident) || is_keyword(peek().text) || peek().text == "_") fail(what);
    return next().text;
  }

  bool starts_term() const {
    if (at(Tok::Sigma)) return true;
    if (!at(Tok::Ident)) return false;
    const std::string& s = peek().text;
    return s == "id" || s == "comp" || s == "coh" || s == "S" || s == "_" || !is_keyword(s);
  }

  RawTerm prefix() {
    const std::size_t start = i_;
    if (!starts_term()) fail("a term");
    RawTermNode n;
    if (at(Tok::Sigma) || is_ident("S")) {
      next();
      n.kind = RTermKind::Susp;
      if (at(Tok::LParen)) {
        next();
        n.inner = term();
        expect(Tok::RParen, "')'");
      } else {
        n.inner = term();
      }
      n.span = span_from(start);
      return make_term(std::move(n));
    }
    const std::string word = next().text;
    if (word == "_") {
      n.kind = RTermKind::Hole;
    } else if (word == "id") {
      n.kind = RTermKind::Id;
    } else if (word == "comp") {
      n.kind = RTermKind::Comp;
    } else if (word == "coh") {
      n.kind = RTermKind::Coh;
      expect(Tok::LBrack, "'['");
      n.ctx = name_tree();
      expect(Tok::Colon, "':'");
      n.type = type();
      expect(Tok::RBrack, "']'");
    } else if (word == "inc" && at(Tok::LAngle) && number_at(1) && peek(2).kind == Tok::Minus && number_at(3) &&
               peek(4).kind == Tok::RAngle) {
      next();
      n.kind = RTermKind::Inc;
      n.n = std::stoul(next().text);
      next();
      n.m = std::stoul(next().text);
      next();
      expect(Tok::LParen, "'('");
      n.inner = term();
      expect(Tok::RParen, "')'");
    } else {
      n.kind = RTermKind::Name;
      n.name = word;
    }
    n.span = span_from(start);
    return make_term(std::move(n));
  }

  bool number_at(std::size_t k) const {
    const Token& t = peek(k);
    if (t.kind != Tok::Ident || t.text.empty() || t.text.size() > 9) return false;
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  }

  RawArgs args() {
    const std::size_t start = i_;
    RawArgs a;
    if (at(Tok::LParen)) {
      next();
      a.form = RawArgs::Form::Sub;
      if (!at(Tok::RParen) && !at(Tok::Colon)) {
        a.terms.push_back(term());
        while (at(Tok::Comma)) {
          next();
          a.terms.push_back(term());
        }
      }
      if (at(Tok::Colon)) {
        next();
        a.ty = type();
      }
      expect(Tok::RParen, "')'");
    } else if (at(Tok::LBrack)) {
      a.form = RawArgs::Form::Square;
      a.label = square_tree<std::optional<RawTerm>>([this] { return opt_term(); }, &a.ty);
    } else {
      expect(Tok::LAngle, "'⟨'");
      a.form = RawArgs::Form::Full;
      a.label = curly_tree<std::optional<RawTerm>>([this] { return opt_term(); });
      if (at(Tok::Colon)) {
        next();
        a.ty = type();
      }
      expect(Tok::RAngle, "'⟩'");
    }
    a.span = span_from(start);
    return a;
  }

  std::optional<RawTerm> opt_term() {
    if (!starts_term()) return std::nullopt;
    return term();
  }

  std::optional<std::string> opt_name() {
    if (!at(Tok::Ident) || is_keyword(peek().text)) return std::nullopt;
    std::string s = next().text;
    if (s == "_") return std::nullopt;
    return s;
  }

  NameTree name_tree() {
    auto elem = [this] { return opt_name(); };
    if (at(Tok::LBrack)) return square_tree<std::optional<std::string>>(elem, nullptr);
    return curly_tree<std::optional<std::string>>(elem);
  }

  template <class X>
  tree::Labelled<X> any_tree(const std::function<X()>& elem) {
    if (at(Tok::LBrack)) return square_tree<X>(elem, nullptr);
    return curly_tree<X>(elem);
  }

  template <class X>
  tree::Labelled<X> curly_tree(const std::function<X()>& elem) {
    tree::Labelled<X> t;
    t.elems.push_back(elem());
    while (at(Tok::LBrace)) {
      next();
      t.branches.push_back(any_tree<X>(elem));
      expect(Tok::RBrace, "'}'");
      t.elems.push_back(elem());
    }
    return t;
  }

  template <class X>
  tree::Labelled<X> square_tree(const std::function<X()>& elem, std::optional<RawType>* ty) {
    expect(Tok::LBrack, "'['");
    tree::Labelled<X> t;
    t.elems.push_back(X{});
    if (!at(Tok::RBrack) && !at(Tok::Colon)) {
      t.branches.push_back(any_tree<X>(elem));
      t.elems.push_back(X{});
      while (at(Tok::Comma)) {
        next();
        t.branches.push_back(any_tree<X>(elem));
        t.elems.push_back(X{});
      }
    }
    if (ty && at(Tok::Colon)) {
      next();
      *ty = type();
    }
    expect(Tok::RBrack, "']'");
    return t;
  }

  RawType type_primary() {
    const std::size_t start = i_;
    if (at(Tok::Star)) {
      next();
      return raw_star(span_from(start));
    }
    if (is_ident("_") && peek(1).kind != Tok::Arrow) {
      next();
      RawTypeNode n;
      n.kind = RTypeKind::Hole;
      n.span = span_from(start);
      return make_type(std::move(n));
    }
    if (at(Tok::LParen)) {
      next();
      RawType inner = type();
      expect(Tok::RParen, "')'");
      if (!(at(Tok::LParen) || at(Tok::LBrack) || at(Tok::LAngle))) return inner;
      RawTypeNode n;
      n.kind = RTypeKind::App;
      n.base = inner;
      n.args = args();
      n.span = span_from(start);
      return make_type(std::move(n));
    }
    if ((at(Tok::Sigma) || is_ident("S")) && peek(1).kind == Tok::LParen) {
      try {
        next();
        next();
        RawType inner = type();
        expect(Tok::RParen, "')'");
        if (!at(Tok::Arrow) && !at(Tok::LParen) && !at(Tok::LBrack) && !at(Tok::LAngle)) {
          RawTypeNode n;
          n.kind = RTypeKind::Susp;
          n.base = inner;
          n.span = span_from(start);
          return make_type(std::move(n));
        }
      } catch (const Error&) {
      }
      i_ = start;
    }
    RawTerm s = term();
    expect(Tok::Arrow, "'->'");
    RawTerm t = term();
    return raw_arrow(std::move(s), std::nullopt, std::move(t), span_from(start));
  }
};

}  // namespace

bool is_keyword(const std::string& s) {
  static const std::array<const char*, 11> kw{"coh", "comp", "id", "def", "normalise", "assert", "size", "import", "in", "S", "_"};
  for (const char* k : kw)
    if (s == k) return true;
  return false;
}

RawTerm make_term(RawTermNode n) { return RawTerm(std::make_shared<const RawTermNode>(std::move(n))); }
RawType make_type(RawTypeNode n) { return RawType(std::make_shared<const RawTypeNode>(std::move(n))); }

RawTerm raw_name(std::string name, Span s) {
  RawTermNode n;
  n.kind = RTermKind::Name;
  n.name = std::move(name);
  n.span = s;
  return make_term(std::move(n));
}

RawTerm raw_hole(Span s) {
  RawTermNode n;
  n.kind = RTermKind::Hole;
  n.span = s;
  return make_term(std::move(n));
}

RawType raw_star(Span s) {
  RawTypeNode n;
  n.kind = RTypeKind::Star;
  n.span = s;
  return make_type(std::move(n));
}

RawType raw_arrow(RawTerm src, std::optional<RawType> base, RawTerm tgt, Span s) {
  RawTypeNode n;
  n.kind = RTypeKind::Arrow;
  n.src = std::move(src);
  n.tgt = std::move(tgt);
  n.base = std::move(base);
  n.span = s;
  return make_type(std::move(n));
}

std::vector<Command> parse(const std::string& text, int source) {
  Parser p(text, source);
  std::vector<Command> out;
  while (!p.done()) out.push_back(p.command());
  return out;
}

RawTerm parse_term(const std::string& text, int source) {
  Parser p(text, source);
  RawTerm t = p.term();
  p.expect_end();
  return t;
}

RawType parse_type(const std::string& text, int source) {
  Parser p(text, source);
  RawType a = p.type();
  p.expect_end();
  return a;
}

RawCtx parse_ctx(const std::string& text, int source) {
  Parser p(text, source);
  RawCtx c = p.ctx();
  p.expect_end();
  return c;
}

}  // namespace catt::surface
