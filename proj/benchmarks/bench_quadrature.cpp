#include <benchmark/benchmark.h>

#include <cmath>

#include "mlx/extended_beta.hpp"
#include "mlx/quadrature.hpp"

static void BM_TanhSinhSmooth(benchmark::State& state) {
  const mlx::QuadratureOptions opts{std::pow(10.0, -static_cast<double>(state.range(0))), 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mlx::integrate_finite([](double x) { return std::exp(-x) * std::cos(x); }, 0.0, 2.0, opts));
  }
}
BENCHMARK(BM_TanhSinhSmooth)->Arg(8)->Arg(12);

static void BM_TanhSinhSingular(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlx::integrate_finite(
        [](double, double l, double r) { return std::pow(l, -0.7) * std::pow(r, -0.4); }, 0.0, 1.0));
  }
}
BENCHMARK(BM_TanhSinhSingular);

static void BM_ExpSinh(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mlx::integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x * x); }, 0.0));
  }
}
BENCHMARK(BM_ExpSinh);

static void BM_ExtendedBeta(benchmark::State& state) {
  const double p = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(mlx::extended_beta({1.5, 2.5, p, 1.7, 2.4}));
}
BENCHMARK(BM_ExtendedBeta)->Arg(1)->Arg(10)->Arg(100);

static void BM_BetaSequence64(benchmark::State& state) {
  const auto kernel = mlx::BetaKernel::kummer(0.5, 1.7, 2.4);
  for (auto _ : state) {
    const mlx::BetaSequence seq(0.7, 1.4, kernel);
    benchmark::DoNotOptimize(seq(63));
  }
}
BENCHMARK(BM_BetaSequence64);
