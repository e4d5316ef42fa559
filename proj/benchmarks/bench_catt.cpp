#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "catt/oracle.hpp"
#include "catt/session.hpp"
#include "catt/surface.hpp"

using namespace catt;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = CATT_CORPUS_DIR;

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  std::ostringstream out, err;
  Session session;

  Loaded(nbe::EvalConfig cfg, const std::string& file) : session(cfg, out, err) { session.run_file(corpus / file); }
};

struct Checked {
  core::Ctx ctx;
  core::Term term;
};

Checked check(const tc::Signature& sig, const std::string& ctx, const std::string& term) {
  core::Ctx u = tc::check_ctx(surface::parse_ctx(ctx), sig);
  core::Term t = tc::check_term(surface::parse_term(term), u, sig).term;
  return {std::move(u), std::move(t)};
}

const std::string path5 =
    "(v : *) (w : *) (f : v -> w) (x : *) (g : w -> x) (y : *) (h : x -> y) (z : *) (i : y -> z)";

void parse_corpus(benchmark::State& state) {
  const std::string text = read(corpus / "monoidal.catt");
  for (auto _ : state) benchmark::DoNotOptimize(surface::parse(text, 0));
}
BENCHMARK(parse_corpus);

void load_corpus(benchmark::State& state) {
  const nbe::EvalConfig cfgs[] = {nbe::EvalConfig::weak(), nbe::EvalConfig::su(), nbe::EvalConfig::sua()};
  for (auto _ : state) {
    Loaded l(cfgs[state.range(0)], "monoidal.catt");
    benchmark::DoNotOptimize(l.session.signature().bindings().size());
  }
}
BENCHMARK(load_corpus)->DenseRange(0, 2);

void normalise_pentagon(benchmark::State& state) {
  const nbe::EvalConfig cfg = state.range(0) == 0 ? nbe::EvalConfig::su() : nbe::EvalConfig::sua();
  Loaded l(cfg, "monoidal.catt");
  const Checked c = check(l.session.signature(), path5, "pentagon(f,g,h,i)");
  for (auto _ : state) benchmark::DoNotOptimize(tc::nf(c.term, c.ctx, cfg));
}
BENCHMARK(normalise_pentagon)->DenseRange(0, 1);

void normalise_eckmann_hilton(benchmark::State& state) {
  const nbe::EvalConfig cfg = nbe::EvalConfig::su();
  Loaded l(cfg, "eh.catt");
  const tc::Binding* b = l.session.signature().find("eh");
  for (auto _ : state) benchmark::DoNotOptimize(tc::nf(b->term, b->ctx, cfg));
}
BENCHMARK(normalise_eckmann_hilton);

void oracle_pentagon(benchmark::State& state) {
  const nbe::EvalConfig cfg = nbe::EvalConfig::sua();
  Loaded l(cfg, "monoidal.catt");
  const Checked c = check(l.session.signature(), path5, "pentagon(f,g,h,i)");
  const flat::Term t = core::flatten_core(c.term, core::Scope::flat(9));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::normalise(t, oracle::RuleSet::SuaPrime));
}
BENCHMARK(oracle_pentagon);

}  // namespace

BENCHMARK_MAIN();
