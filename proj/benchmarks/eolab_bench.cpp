#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "eolab/oracle.hpp"
#include "eolab/pattern.hpp"
#include "eolab/poset.hpp"
#include "eolab/search.hpp"

namespace {

using namespace eolab;

std::vector<Natural> shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<Natural> v(n);
  std::iota(v.begin(), v.end(), Natural{0});
  std::shuffle(v.begin(), v.end(), std::mt19937_64(seed));
  return v;
}

void BM_PatternOf(benchmark::State& state) {
  const auto seq = shuffled(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pattern_of(seq));
}
BENCHMARK(BM_PatternOf)->Arg(8)->Arg(64)->Arg(1024);

void BM_EoLeq(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const OrderPattern p = pattern_of(shuffled(n, 2));
  const OrderPattern q = OrderPattern::identity(n);
  for (auto _ : state) benchmark::DoNotOptimize(eo_leq(p, q));
}
BENCHMARK(BM_EoLeq)->Arg(8)->Arg(64);

void BM_BuildPoset(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_poset(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_BuildPoset)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SearchVsBruteForce(benchmark::State& state) {
  const std::vector<Natural> a = shuffled(6, 3);
  const std::vector<Natural> b = shuffled(6, 4);
  const bool brute = state.range(0) != 0;
  for (auto _ : state) {
    if (brute) {
      benchmark::DoNotOptimize(oracle::brute_force_witness(a, b, 6, 3, Relation::uniform));
    } else {
      benchmark::DoNotOptimize(search_witness(a, b, 6, 3, 10'000'000, Relation::uniform));
    }
  }
}
BENCHMARK(BM_SearchVsBruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
