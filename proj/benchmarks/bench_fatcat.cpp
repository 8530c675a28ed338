#include <benchmark/benchmark.h>

#include "fatcat/cocycle.hpp"
#include "fatcat/comparison.hpp"

using namespace fatcat;

namespace {

CategoryPtr shared(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

void BM_NerveOrdinal(benchmark::State& state) {
  const auto c = ordinal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nerve(c, 4));
}
BENCHMARK(BM_NerveOrdinal)->DenseRange(1, 4);

void BM_HomologyBZ2(benchmark::State& state) {
  const auto D = static_cast<int>(state.range(0));
  const auto chains = fat_chains(nerve(cyclic_group(2).base(), D));
  for (auto _ : state) benchmark::DoNotOptimize(homology_through(chains, D - 1));
}
BENCHMARK(BM_HomologyBZ2)->DenseRange(3, 7, 2);

void BM_HomologyPairNerve(benchmark::State& state) {
  const auto chains = fat_chains(nerve(pair_groupoid(static_cast<int>(state.range(0))).base(), 4));
  for (auto _ : state) benchmark::DoNotOptimize(homology_through(chains, 3));
}
BENCHMARK(BM_HomologyPairNerve)->DenseRange(2, 4);

void BM_CellBijection(benchmark::State& state) {
  const auto c = shared(ordinal(2));
  const auto N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unravel_cell_bijection(c, N, 3));
}
BENCHMARK(BM_CellBijection)->DenseRange(3, 5);

void BM_ProjectionQuasiIso(benchmark::State& state) {
  const auto g = cyclic_group(2);
  const auto N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_iso_through(projection_pi(g.base(), N, 4), 2));
}
BENCHMARK(BM_ProjectionQuasiIso)->DenseRange(4, 6);

void BM_QuillenSweep(benchmark::State& state) {
  const auto c = shared(ordinal(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_quillen_a(c, 4, 3));
}
BENCHMARK(BM_QuillenSweep)->DenseRange(1, 2);

void BM_SubdivisionOperator(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subdivision_operator(n));
}
BENCHMARK(BM_SubdivisionOperator)->DenseRange(2, 5);

void BM_BlowupRandomCover(benchmark::State& state) {
  const auto base = examples::random_star_cover(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(blowup_vs_base(base, 2));
}
BENCHMARK(BM_BlowupRandomCover)->Arg(1)->Arg(2);

void BM_UniversalCocycle(benchmark::State& state) {
  const auto g = std::make_shared<const FinGroupoid>(pair_groupoid(2));
  const auto N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_universal_cocycle(bg_complex(g, N, 3)));
}
BENCHMARK(BM_UniversalCocycle)->DenseRange(1, 4);

void BM_PartitionHomotopy(benchmark::State& state) {
  const auto t = PartitionPoint::make({Rational(1, 3), Rational(1, 4), Rational(1, 6), Rational(1, 4)});
  for (auto _ : state) benchmark::DoNotOptimize(check_partition_homotopy(t, Rational(1, 2)));
}
BENCHMARK(BM_PartitionHomotopy);

}  // namespace

BENCHMARK_MAIN();
