#include <benchmark/benchmark.h>

#include "mlx/special.hpp"

// One argument per 1F1 regime: Maclaurin, Kummer transform, asymptotic.
static void BM_Kummer1F1(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mlx::kummer_1f1(1.7, 2.4, x));
}
BENCHMARK(BM_Kummer1F1)->Arg(5)->Arg(45)->Arg(-5)->Arg(-45)->Arg(-200)->Arg(-5000);

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlx::log_gamma(x));
    x = x < 50 ? x + 0.37 : 0.5;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_WrightPsi(benchmark::State& state) {
  const mlx::WrightSeriesSpec spec{{{2.1, 1.0}, {1.3, 1.0}}, {{1.3, 0.8}, {3.3, 1.0}}};
  for (auto _ : state) benchmark::DoNotOptimize(mlx::wright_psi(spec, -0.9));
}
BENCHMARK(BM_WrightPsi);
