// Serial reference path against the OpenMP path for the parallel kernels.
#include <benchmark/benchmark.h>

#include "hyperlp/curves.hpp"
#include "hyperlp/harness.hpp"

using namespace hyperlp;

namespace {

HarnessOptions mode(bool parallel) {
  HarnessOptions o;
  o.parallel = parallel;
  return o;
}

void BM_TraceCurves(benchmark::State& state) {
  const std::vector<Real> roots = laguerre_root_set(5, Real::from_rational(mpq_class(3, 2)), Real(5, kDefaultPrecision));
  const Real delta = sqr(Real::pi()) / Real(6, kDefaultPrecision);
  TraceOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(trace_root_curves(roots, delta, 2, opts));
}

void BM_DeltaDifference(benchmark::State& state) {
  DeltaDifferenceConfig cfg;
  cfg.trials = 200;
  for (auto _ : state) benchmark::DoNotOptimize(suite_delta_difference(cfg, mode(state.range(0) != 0)));
}

void BM_OnoGrid(benchmark::State& state) {
  OnoGridConfig cfg;
  cfg.alphas = {mpq_class(1)};
  cfg.n_max = 20;
  for (auto _ : state) benchmark::DoNotOptimize(suite_ono_grid(cfg, mode(state.range(0) != 0)));
}

}  // namespace

BENCHMARK(BM_TraceCurves)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaDifference)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OnoGrid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
