#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catt/core.hpp"
#include "catt/surface.hpp"
#include "catt/to_raw.hpp"
#include "support/gen.hpp"

using namespace catt;
using namespace catt::surface;

namespace {

std::string corpus_text(const std::string& name) {
  std::ifstream in(std::filesystem::path(CATT_CORPUS_DIR) / name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagnostic parse_error(const std::string& text) {
  try {
    parse(text, 0);
  } catch (const Error& e) {
    return e.diagnostic();
  }
  FAIL("expected a parse error for " << text);
  return {};
}

}  // namespace

TEST_CASE("tree notations agree") {
  const RawCtx curly = parse_ctx("{f}{{a}{b}}");
  const RawCtx square = parse_ctx("[f,[a,b]]");
  REQUIRE(curly.is_tree());
  REQUIRE(square.is_tree());
  CHECK(same(curly, square));
  CHECK(tree::shape(std::get<NameTree>(curly.ctx)) == tree::Tree{{tree::Tree{}, tree::Tree{{tree::Tree{}, tree::Tree{}}}}});
  CHECK(same(parse_ctx("{f}{g}"), parse_ctx("[f,g]")));
  CHECK(!same(parse_ctx("x{f}y{g}z"), parse_ctx("[f,g]")));
  CHECK(!same(parse_ctx("x{f}y{g}z"), parse_ctx("[g,f]")));
  CHECK(same(parse_ctx("[[a]]"), parse_ctx("{{a}}")));
}

TEST_CASE("commands") {
  const auto cs = parse("def comp1 [f,g] = comp\n"
                        "def id2 (x : *) : x -> x = id(x)\n"
                        "def c = coh [ x{f}y : x -> y ]\n"
                        "assert comp1(f,g) = comp1(f,g) in [f,g]\n"
                        "normalise id(x) in (x : *)\n"
                        "size f in [f]\n"
                        "import other.catt\n",
                        0);
  REQUIRE(cs.size() == 7);
  CHECK(cs[0].kind == Command::Kind::Def);
  CHECK(cs[0].name == "comp1");
  REQUIRE(cs[0].ctx);
  CHECK(cs[0].ctx->is_tree());
  CHECK(!cs[0].type);
  CHECK(cs[0].term->kind() == RTermKind::Comp);
  CHECK(cs[1].type);
  CHECK(!cs[1].ctx->is_tree());
  CHECK(!cs[2].ctx);
  CHECK(cs[2].term->kind() == RTermKind::Coh);
  CHECK(cs[3].kind == Command::Kind::Assert);
  CHECK(cs[3].rhs);
  CHECK(cs[4].kind == Command::Kind::Normalise);
  CHECK(cs[5].kind == Command::Kind::Size);
  CHECK(cs[6].kind == Command::Kind::Import);
  CHECK(cs[6].path == "other.catt");
  CHECK(parse("# only a comment\n\n", 0).empty());
}

TEST_CASE("term syntax") {
  CHECK(same(parse_type("x -> y"), parse_type("x → y")));
  CHECK(same(parse_term("Σ(f)"), parse_term("S(f)")));
  CHECK(parse_term("S(f)")->kind == RTermKind::Susp);
  CHECK(parse_term("_")->kind == RTermKind::Hole);
  CHECK(parse_type("_")->kind == RTypeKind::Hole);
  const RawType annotated = parse_type("* | x -> y");
  REQUIRE(annotated->base);
  CHECK(annotated->base->kind() == RTypeKind::Star);
  const RawTerm app = parse_term("f⟨x{g}y⟩");
  REQUIRE(app->kind == RTermKind::App);
  CHECK(app->args->form == RawArgs::Form::Full);
  CHECK(parse_term("f[g]")->args->form == RawArgs::Form::Square);
  CHECK(parse_term("f(g, h)")->args->form == RawArgs::Form::Sub);
  const RawTerm inc = parse_term("inc⟨0-2⟩(f)");
  REQUIRE(inc->kind == RTermKind::Inc);
  CHECK(inc->n == 0);
  CHECK(inc->m == 2);
}

TEST_CASE("printing") {
  CHECK(pretty(raw_hole()) == "_");
  CHECK(pretty(parse_term("inc⟨0-2⟩(f)")) == "inc⟨0-2⟩(f)");
  CHECK(pretty(parse_type("x → y")) == "x -> y");
  CHECK(pretty(parse_term("Σ(f)")) == "S(f)");
  CHECK(pretty(parse_term("coh [ x{f}y : x -> y ]")) == "coh [x{f}y : x -> y]");
  CHECK(pretty(parse_ctx("(x : *) (f : x -> x)")) == "(x : *) (f : x -> x)");
}

TEST_CASE("parsing the printed corpus gives the corpus back") {
  for (const char* f : {"monoidal.catt", "eh.catt", "reductions.catt", "pruning.catt"}) {
    INFO(f);
    const auto cs = parse(corpus_text(f), 0);
    REQUIRE(!cs.empty());
    for (const auto& c : cs) {
      const std::string p = pretty(c);
      const auto back = parse(p, 1);
      REQUIRE(back.size() == 1);
      CHECK_MESSAGE(same(back[0], c), p);
    }
  }
}

TEST_CASE("printed core syntax parses back") {
  testing::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const tree::Tree t = testing::random_tree(rng, 9);
    const testing::Typed x = testing::random_term(rng, t, 3, 3);
    const core::Scope sc = core::Scope::tree(t);
    const core::Ctx u = core::unnamed(t);
    for (bool keep : {false, true}) {
      const RawTerm r = to_raw(core::from_flat(x.term, sc), &u, keep);
      CHECK(same(parse_term(pretty(r)), r));
      const RawType a = to_raw(core::from_flat(x.type, sc), &u, keep);
      CHECK(same(parse_type(pretty(a)), a));
    }
  }
}

TEST_CASE("syntax errors point into the source") {
  const Diagnostic d = parse_error("def = x");
  CHECK(d.span.start == 4);
  CHECK(d.span.source == 0);
  CHECK(d.message.find("definition name") != std::string::npos);

  const Diagnostic eof = parse_error("normalise id(x) in (x : *");
  CHECK(eof.span.start == 25);
  CHECK(eof.message.find("')'") != std::string::npos);

  CHECK(parse_error("def def = x").span.start == 4);
  CHECK(parse_error("def x = coh [ x{f : x}y : x ]").span.start == 18);
  CHECK(parse_error("def x = @").span.start == 8);

  SourceMap sm;
  const int id = sm.add("bad.catt", "def x =\n  (");
  try {
    parse(sm.get(id).text, id);
    FAIL("no error");
  } catch (const Error& e) {
    const std::string r = render(e.diagnostic(), sm);
    CHECK(r.find("bad.catt:2:3") != std::string::npos);
  }
}

TEST_CASE("keywords") {
  for (const char* k : {"coh", "comp", "id", "def", "normalise", "assert", "size", "import", "in"}) CHECK(is_keyword(k));
  CHECK(!is_keyword("f"));
}

TEST_CASE("line and column") {
  CHECK(line_col("ab\ncd", 0).line == 1);
  CHECK(line_col("ab\ncd", 4).line == 2);
  CHECK(line_col("ab\ncd", 4).col == 2);
}
