#include <benchmark/benchmark.h>

#include <random>

#include "mobius/mobius.hpp"

namespace {

using namespace mobius;

void set_counters(benchmark::State& state, const OpCounter& c) {
  state.counters["additions"] = static_cast<double>(c.additions);
  state.counters["multiplications"] = static_cast<double>(c.multiplications);
}

void BM_MassToBelFast(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto m = random_bba(Frame::numbered(static_cast<std::size_t>(state.range(0))), rng);
  OpCounter c;
  fmt_mass_to_bel(m, false, &c);
  for (auto _ : state) benchmark::DoNotOptimize(fmt_mass_to_bel(m, false));
  set_counters(state, c);
}
BENCHMARK(BM_MassToBelFast)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_MassToBelNaive(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto m = random_bba(Frame::numbered(static_cast<std::size_t>(state.range(0))), rng);
  OpCounter c;
  naive_transform(TransformKind::mass_to_bel, m, &c);
  for (auto _ : state) benchmark::DoNotOptimize(naive_transform(TransformKind::mass_to_bel, m));
  set_counters(state, c);
}
BENCHMARK(BM_MassToBelNaive)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

void BM_CombineToPlFast(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const Frame f = Frame::numbered(static_cast<std::size_t>(state.range(0)));
  const auto m1 = random_bba(f, rng), m2 = random_bba(f, rng);
  OpCounter c;
  combine_to_plausibility(m1, m2, Algorithm::fast, &c);
  for (auto _ : state) benchmark::DoNotOptimize(combine_to_plausibility(m1, m2, Algorithm::fast));
  set_counters(state, c);
}
BENCHMARK(BM_CombineToPlFast)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_CombineToPlNaive(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const Frame f = Frame::numbered(static_cast<std::size_t>(state.range(0)));
  const auto m1 = random_bba(f, rng), m2 = random_bba(f, rng);
  OpCounter c;
  combine_to_plausibility(m1, m2, Algorithm::naive, &c);
  for (auto _ : state) benchmark::DoNotOptimize(combine_to_plausibility(m1, m2, Algorithm::naive));
  set_counters(state, c);
}
BENCHMARK(BM_CombineToPlNaive)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_VerifyHasse(benchmark::State& state) {
  const auto h = hasse_sequence(static_cast<std::size_t>(state.range(0)), Relation::subset, true);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(h));
}
BENCHMARK(BM_VerifyHasse)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
