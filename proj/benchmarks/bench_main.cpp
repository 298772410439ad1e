#include <benchmark/benchmark.h>

#include <random>

#include "hololab/cs.hpp"
#include "hololab/holomorph.hpp"
#include "hololab/homomorphism.hpp"
#include "hololab/liealg.hpp"
#include "hololab/regsub.hpp"
#include "hololab/standard_groups.hpp"

using namespace hololab;

static void BM_NormalizerInHolS3(benchmark::State& state) {
  const auto g = symmetric(3);
  const auto h = inhol(g);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_in_sym(6, h).order());
}
BENCHMARK(BM_NormalizerInHolS3);

static void BM_NormalizerInHolD4(benchmark::State& state) {
  Limits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  const auto g = dihedral(4);
  const auto h = inhol(g);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer_in_sym(8, h, limits).order());
}
BENCHMARK(BM_NormalizerInHolD4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& state) {
  const auto g = direct_product(symmetric(3), symmetric(3));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g).size());
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

static void BM_Endomorphisms(benchmark::State& state) {
  const auto g = dihedral(5);
  for (auto _ : state) benchmark::DoNotOptimize(homomorphisms(g, g).size());
}
BENCHMARK(BM_Endomorphisms);

static void BM_FpfPairs(benchmark::State& state) {
  const auto g = direct_product(symmetric(3), symmetric(3));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fpf_pairs(g, g).size());
}
BENCHMARK(BM_FpfPairs)->Unit(benchmark::kMillisecond);

static void BM_BchMultiply(benchmark::State& state) {
  const auto alg = LieAlgebra::create(4, 4, 5);
  std::mt19937_64 rng(1);
  auto random = [&] {
    auto v = LieVector::zero(alg);
    for (std::size_t i = 0; i < v.size(); ++i) v.set(i, static_cast<std::int64_t>(rng() % 5));
    return v;
  };
  const auto x = random(), y = random();
  for (auto _ : state) benchmark::DoNotOptimize(bch_multiply(x, y));
}
BENCHMARK(BM_BchMultiply);

static void BM_CsMultiply(benchmark::State& state) {
  const auto g = CsGroup::build({cyclic(4), 7});
  std::mt19937_64 rng(2);
  const auto a = g.random_element(rng), b = g.random_element(rng);
  for (auto _ : state) benchmark::DoNotOptimize(g.multiply(a, b));
}
BENCHMARK(BM_CsMultiply);
BENCHMARK_MAIN();
