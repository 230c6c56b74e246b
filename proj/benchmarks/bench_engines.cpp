#include <benchmark/benchmark.h>

#include "pluq/elimination.hpp"
#include "pluq/matgen.hpp"

namespace {

using namespace pluq;

// Square n x n instance of rank n/2 with a planted rank profile matrix.
template <class Engine>
void run(benchmark::State& state, Engine engine) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t r = n / 2;
  const DenseMatrix a = random_rpm_matrix({n, n, r, kDefaultPrime, 1});
  std::uint64_t reductions = 0;
  for (auto _ : state) {
    PluqFactors f = engine(a);
    reductions = f.reductions;
    benchmark::DoNotOptimize(f);
  }
  const double nd = static_cast<double>(n), rd = static_cast<double>(r);
  const double cost = 2 * nd * nd * rd + 2.0 / 3.0 * rd * rd * rd - rd * rd * 2 * nd;
  state.counters["Gflops"] = benchmark::Counter(cost * 1e-9, benchmark::Counter::kIsIterationInvariantRate);
  state.counters["reductions"] = static_cast<double>(reductions);
}

void BM_Crout(benchmark::State& s) { run(s, [](const DenseMatrix& a) { return pluq_crout_lex(a); }); }
void BM_TileRecursive(benchmark::State& s) {
  run(s, [](const DenseMatrix& a) { return pluq_tile_recursive(a, 64); });
}
void BM_LeftLooking(benchmark::State& s) { run(s, [](const DenseMatrix& a) { return pluq_left_looking_product(a); }); }
void BM_RightLooking(benchmark::State& s) {
  run(s, [](const DenseMatrix& a) { return pluq_right_looking_product(a); });
}

}  // namespace

BENCHMARK(BM_Crout)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TileRecursive)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeftLooking)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RightLooking)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
