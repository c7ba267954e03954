// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "firstfall/cryptosys.hpp"
#include "firstfall/macaulay.hpp"
#include "firstfall/series.hpp"

using namespace firstfall;

namespace {

const FieldSpec kField(65521);

const MacaulayView& macaulay_fixture(int d) {
  static std::map<int, MacaulayView> cache;
  auto it = cache.find(d);
  if (it == cache.end()) {
    const auto sys = random_system(RingSpec::standard(kField, 7), std::vector<MultiDegree>(9, MultiDegree{2}), 1);
    it = cache.emplace(d, macaulay_matrix(sys, {d})).first;
  }
  return it->second;
}

void BM_Rank(benchmark::State& state, RankKernel kernel) {
  const auto& view = macaulay_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank_with(kernel, view.matrix, kField));
  state.counters["rows"] = static_cast<double>(view.rows());
  state.counters["cols"] = static_cast<double>(view.cols());
}

void BM_Series(benchmark::State& state, Kernel kernel) {
  RingSpec r(kField, {{"x", 40}, {"y", 30}});
  std::vector<MultiDegree> degs(39, MultiDegree{1, 1});
  degs.insert(degs.end(), 20, MultiDegree{2, 0});
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_series(r, degs, bound, kernel));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Rank, reference, RankKernel::Reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, dense_parallel, RankKernel::DenseParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Rank, sparse, RankKernel::Sparse)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Series, serial, Kernel::Serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Series, parallel, Kernel::Parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
