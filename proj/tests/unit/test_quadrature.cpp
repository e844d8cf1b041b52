#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "mlx/errors.hpp"
#include "mlx/quadrature.hpp"
#include "oracles/oracles.hpp"

using namespace mlx;

TEST_CASE("finite rule integrates polynomials and smooth functions") {
  const auto r = integrate_finite([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));

  const auto s = integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("finite rule against the midpoint oracle") {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3 * x) / (1 + x * x); };
  const double ref = oracle::midpoint(f, -0.7, 2.3);
  const auto r = integrate_finite(f, -0.7, 2.3, {1e-13, 0.0});
  CHECK(oracle::rel_diff(r.value, ref) < 1e-11);
}

TEST_CASE("algebraic and logarithmic endpoint singularities") {
  CHECK(integrate_finite([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0).value ==
        doctest::Approx(-1.0).epsilon(1e-12));

  // (1-x)^-0.9 only stays accurate near x = 1 when the gap is used directly.
  const auto r = integrate_finite(
      [](double, double, double right) { return std::pow(right, -0.9); }, 0.0, 1.0,
      {1e-12, 0.0});
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(10.0).epsilon(1e-11));
}

TEST_CASE("gaps are consistent with the abscissa") {
  integrate_finite(
      [](double x, double left, double right) {
        CHECK(left > 0);
        CHECK(right > 0);
        CHECK(x == doctest::Approx(2.0 + left).epsilon(1e-15));
        CHECK(std::abs(left + right - 3.0) <= 1e-14);
        return 1.0;
      },
      2.0, 5.0, {1e-6, 0.0, 4});
}

TEST_CASE("semi-infinite rule") {
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate_semi_infinite([](double x) { return 1 / (1 + x * x); }, 0.0).value ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  const auto shifted = integrate_semi_infinite(
      [](double x, double left, double) { return std::exp(-x) / std::sqrt(left); }, 1.0);
  CHECK(shifted.converged);
  CHECK(shifted.value == doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-1.0)).epsilon(1e-11));
}

TEST_CASE("batched integrands match individual runs") {
  const QuadratureOptions opts{1e-12, 0.0};
  const auto batch = integrate_finite_batch(
      [](double x, double, double, std::span<double> out) {
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = std::pow(x, k + 0.5);
      },
      4, 0.0, 1.0, opts);
  CHECK(batch.converged);
  REQUIRE(batch.values.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(batch.values[k] == doctest::Approx(1.0 / (k + 1.5)).epsilon(1e-12));
  }
}

TEST_CASE("errors and non-convergence") {
  CHECK_THROWS_AS(integrate_finite([](double) { return 1.0; }, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return 1.0; }, INFINITY), DomainError);
  CHECK_THROWS_AS((QuadratureOptions{-1.0}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureOptions{1e-10, 1e-14, 0}.validate()), DomainError);
  CHECK_THROWS_AS((QuadratureOptions{1e-10, 1e-14, 12, 8}.validate()), DomainError);

  try {
    integrate_finite([](double x) { return x > 0.5 && x < 0.6 ? NAN : 1.0; }, 0.0, 1.0);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.abscissa() > 0.5);
    CHECK(e.abscissa() < 0.6);
  }

  // A violently oscillating integrand cannot settle within three levels.
  const auto r = integrate_finite([](double x) { return std::sin(1e4 * x); }, 0.0, 1.0,
                                  {1e-12, 0.0, 3});
  CHECK_FALSE(r.converged);
  CHECK_THROWS_AS(require_converged(r, "oscillating"), NonConvergenceError);
}

TEST_CASE("evaluation budget is honoured") {
  QuadratureOptions opts{1e-15, 0.0, 16, 200};
  const auto r = integrate_finite([](double x) { return std::sin(50 * x); }, 0.0, 1.0, opts);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 400);
}
