#include <benchmark/benchmark.h>

#include <random>

#include "rolelogic/rolelogic.hpp"

using namespace rolelogic;

namespace {

const Signature kRecords({}, {"f", "g", "h"});

role::Formula record_join() {
  return parse_role("(card=1 f & card=0 fc(f)) * (card=1 g & card=0 fc(g))", kRecords);
}

Model random_model(const Signature& sig, int n, std::mt19937_64& rng) {
  Model m(sig, n);
  for (auto& w : m.words()) w = rng();
  for (int i = 0; i < m.word_count(); ++i) {
    int width = m.word_width(i);
    if (width < 64) m.words()[i] &= (std::uint64_t{1} << width) - 1;
  }
  return m;
}

void BM_RoleEvalSpatial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto f = desugar(record_join(), kRecords);
  std::mt19937_64 rng(1);
  std::vector<Model> models;
  for (int i = 0; i < 64; ++i) models.push_back(random_model(kRecords, n, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    // fresh evaluator: no memo carried between iterations
    benchmark::DoNotOptimize(eval_role_mask(f, models[i++ % models.size()]));
  }
}
BENCHMARK(BM_RoleEvalSpatial)->Arg(2)->Arg(3);

void BM_DepthOneNf(benchmark::State& state) {
  Signature sig({"A"}, {"f"});
  auto f = parse_fo("(exists=1 x. f(x1,x) & A(x)) & (exists<=1 x. f(x,x1))", sig);
  NfOptions opts;
  opts.project = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(depth_one_nf(f, sig, {"x1"}, opts));
}
BENCHMARK(BM_DepthOneNf)->Arg(0)->Arg(1);

void BM_CombineStars(benchmark::State& state) {
  Signature sig({}, {"f"});
  auto u = StarUniverse::make(sig, 1, Relevance::full(sig));
  std::mt19937_64 rng(2);
  std::vector<GenStar> stars;
  for (int i = 0; i < 32; ++i) {
    GenStar s{{"x1"}, {0}, u, 0, {}};
    for (Extension t = 0; t < u->extension_count(); ++t)
      if (rng() % 2) s.set(t, rng() % 2 ? Count::exact(rng() % 3) : Count::at_least(rng() % 3));
    stars.push_back(s);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combine_stars(stars[i % 32], stars[(i * 7 + 3) % 32]));
    ++i;
  }
}
BENCHMARK(BM_CombineStars);

void BM_EliminateRecordJoin(benchmark::State& state) {
  auto f = record_join();
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_spatial(f, kRecords));
}
BENCHMARK(BM_EliminateRecordJoin)->Unit(benchmark::kMillisecond);

void BM_BoundedEquivRecordJoin(benchmark::State& state) {
  auto f = record_join();
  auto g = parse_role("card=1 f & card=1 g & card=0 h", kRecords);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounded_equiv(f, g, n, kRecords));
}
BENCHMARK(BM_BoundedEquivRecordJoin)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BoundedSatBtr(benchmark::State& state) {
  Signature sig({"A"}, {"f"});
  auto f = parse_fo("(forall x. exists y. f(x,y)) * (exists>=2 x. A(x))", sig);
  auto [g, esig] = btr_reduce(f, sig);
  auto ext = esig.extended();
  for (auto _ : state) benchmark::DoNotOptimize(bounded_sat(g, 3, ext));
}
BENCHMARK(BM_BoundedSatBtr)->Unit(benchmark::kMillisecond);

void BM_EvalSol(benchmark::State& state) {
  Signature sig({"A"}, {"f"});
  auto f = parse_fo("A(x) * exists y. f(x,y)", sig);
  auto s = to_sol(f, sig);
  std::mt19937_64 rng(3);
  Model m = random_model(sig, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eval_sol(s, m, {{"x", 0}}));
}
BENCHMARK(BM_EvalSol);

}  // namespace
BENCHMARK_MAIN();
