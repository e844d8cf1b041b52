#include <benchmark/benchmark.h>

#include "mlx/fractional.hpp"
#include "mlx/mellin.hpp"
#include "mlx/mittag_leffler.hpp"

static void BM_Prabhakar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mlx::ml_prabhakar(0.8, 1.3, 0.7, -1.4));
}
BENCHMARK(BM_Prabhakar);

static void BM_ExtendedSeries(benchmark::State& state) {
  const mlx::ExtendedMLParams e{0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.35};
  for (auto _ : state) benchmark::DoNotOptimize(mlx::ml_ext_series(e, -1.4));
}
BENCHMARK(BM_ExtendedSeries)->Unit(benchmark::kMicrosecond);

static void BM_ExtendedIntegral(benchmark::State& state) {
  const mlx::ExtendedMLParams e{0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.35};
  for (auto _ : state) benchmark::DoNotOptimize(mlx::ml_ext_integral(e, -1.4));
}
BENCHMARK(BM_ExtendedIntegral)->Unit(benchmark::kMicrosecond);

static void BM_MellinNumeric(benchmark::State& state) {
  const mlx::MellinPoint pt{0.9, {0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.0}, -0.6};
  for (auto _ : state) benchmark::DoNotOptimize(mlx::mellin_numeric(pt));
}
BENCHMARK(BM_MellinNumeric)->Unit(benchmark::kMillisecond);

static void BM_FractionalImage(benchmark::State& state) {
  const mlx::PrabhakarImageArgs args{0.9, 1.8, 0.8, 1.2, 1.8, 0.7, 0.4, 1.5, 2.2};
  for (auto _ : state) benchmark::DoNotOptimize(mlx::prabhakar_image_lhs(args));
}
BENCHMARK(BM_FractionalImage)->Unit(benchmark::kMillisecond);
