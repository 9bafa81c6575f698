#include <benchmark/benchmark.h>

#include <random>

#include "eulerlab/flagsearch.hpp"
#include "eulerlab/torus.hpp"

using namespace eulerlab;

namespace {

RepE random_rep(std::mt19937_64& rng, int l, int dim, bool allow_trivial) {
  std::uniform_int_distribution<std::uint64_t> pick(allow_trivial ? 0 : 1, (std::uint64_t{1} << l) - 1);
  RepE r(l);
  for (int k = 0; k < dim; ++k) r.add(CharF2{pick(rng)}, 1);
  return r;
}

void BM_FixedGaps(benchmark::State& state, Execution exec) {
  const int l = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const RepE u = random_rep(rng, l, 40, true), v = random_rep(rng, l, 12, false);
  const auto subs = all_subgroups(l);
  for (auto _ : state) benchmark::DoNotOptimize(fixed_gaps(u, v, subs, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subs.size()));
}

void BM_Equivariance(benchmark::State& state, Execution exec) {
  const auto m = circle_example(5, 7, 3);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_equivariance(m, {samples, 1e-9, 0, exec}));
  state.SetItemsProcessed(state.iterations() * samples);
}

}  // namespace

BENCHMARK_CAPTURE(BM_FixedGaps, serial, Execution::Serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FixedGaps, parallel, Execution::Parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Equivariance, serial, Execution::Serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Equivariance, parallel, Execution::Parallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
