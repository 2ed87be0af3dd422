#include <benchmark/benchmark.h>

#include "sumfree/construction.hpp"
#include "sumfree/decomposition.hpp"
#include "sumfree/distributions.hpp"
#include "sumfree/progression.hpp"
#include "sumfree/verification.hpp"

namespace {

using namespace sumfree;

void BM_capacity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(capacity({3, 3}));
}
BENCHMARK(BM_capacity);

void BM_nu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nu({5, 3}));
}
BENCHMARK(BM_nu);

void BM_marginal_tensor(benchmark::State& state) {
  const ScaledDistribution d = nu({static_cast<int>(state.range(0)), 3});
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_marginal_tensor(d, 3));
}
BENCHMARK(BM_marginal_tensor)->Arg(3)->Arg(5)->Arg(8);

void BM_tame_decompose(benchmark::State& state) {
  const ScaledDistribution psi{{rat(7), rat(6), rat(5), rat(4), rat(3), rat(2), rat(1)}};
  for (auto _ : state) benchmark::DoNotOptimize(tame_decompose(psi, 3));
}
BENCHMARK(BM_tame_decompose);

void BM_progression_free(benchmark::State& state) {
  const auto P = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(progression_free_set(P, 3, PfsMethod::greedy));
}
BENCHMARK(BM_progression_free)->Arg(101)->Arg(1009);

void BM_construct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct(2, 3, n, 0));
}
BENCHMARK(BM_construct)->Arg(6)->Arg(9);

void BM_verify(benchmark::State& state) {
  const ConstructResult r = construct(2, 3, 9, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sumfree(r.zm_view));
}
BENCHMARK(BM_verify);

void BM_bounded_count(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounded_tuple_count(40, 5, 5));
}
BENCHMARK(BM_bounded_count);

}  // namespace

BENCHMARK_MAIN();
