#include <benchmark/benchmark.h>

#include "cperm/association.hpp"
#include "cperm/enumeration.hpp"
#include "cperm/unimodal.hpp"
#include "cperm/verification.hpp"

namespace {

using namespace cperm;

// Membership test over all of S_n, single-threaded.
void BM_IsAssociatedOverSn(benchmark::State& state) {
  const auto perms = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long members = 0;
    for (const auto& p : perms) members += is_associated(p).member();
    benchmark::DoNotOptimize(members);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(perms.size()));
}
BENCHMARK(BM_IsAssociatedOverSn)->DenseRange(6, 8);

void BM_SquareBySigma(benchmark::State& state) {
  const auto perms = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long n = 0;
    for (const auto& p : perms) n += is_square_by_sigma(p);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(perms.size()));
}
BENCHMARK(BM_SquareBySigma)->DenseRange(6, 8);

void BM_SquareByPatterns(benchmark::State& state) {
  const auto perms = all_permutations(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long n = 0;
    for (const auto& p : perms) n += is_square_by_patterns(p);
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(perms.size()));
}
BENCHMARK(BM_SquareByPatterns)->DenseRange(6, 8);

// 2^k permutominoes for a permutation with k free fixed points.
void BM_FiberOfIdentityLike(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> v{2, 1};
  for (int i = 3; i <= n; ++i) v.push_back(i);
  const Permutation p(v);
  for (auto _ : state) benchmark::DoNotOptimize(fiber(p));
}
BENCHMARK(BM_FiberOfIdentityLike)->Arg(6)->Arg(10)->Arg(14);

void BM_ConvexByFibers(benchmark::State& state) {
  EnumerationOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_convex_permutominoes(static_cast<int>(state.range(0)), ConvexMethod::kFibers, opts));
  }
}
BENCHMARK(BM_ConvexByFibers)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_ConvexByIntervals(benchmark::State& state) {
  EnumerationOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_convex_permutominoes(static_cast<int>(state.range(0)), ConvexMethod::kIntervals, opts));
  }
}
BENCHMARK(BM_ConvexByIntervals)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Census)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
