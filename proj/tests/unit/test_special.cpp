#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mlx/errors.hpp"
#include "mlx/special.hpp"
#include "oracles/oracles.hpp"

using namespace mlx;

TEST_CASE("gamma family") {
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-15));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  CHECK(gamma_fn(-1.5) == doctest::Approx(4.0 * std::sqrt(std::numbers::pi) / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
  CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
  CHECK_THROWS_AS(log_gamma(-0.5), DomainError);

  for (double x : {0.1, 0.7, 3.3, 17.5, 140.2}) {
    CHECK(oracle::rel_diff(log_gamma(x), boost::math::lgamma(x)) < 1e-14);
  }
  const SignedLog g = signed_log_gamma(-2.5);
  CHECK(g.sign == -1);
  CHECK(g.value() == doctest::Approx(boost::math::tgamma(-2.5)).epsilon(1e-14));
}

TEST_CASE("beta and Pochhammer") {
  for (auto [x, y] : {std::pair{0.3, 0.8}, {2.5, 7.25}, {40.0, 0.01}}) {
    CHECK(oracle::rel_diff(beta(x, y), boost::math::beta(x, y)) < 1e-13);
    CHECK(beta(x, y) == beta(y, x));
  }
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(-2.0, 5) == 0.0);
  CHECK(pochhammer(0.5, 0) == 1.0);
  CHECK(oracle::rel_diff(pochhammer(0.3, 150),
                         boost::math::tgamma(150.3) / boost::math::tgamma(0.3)) < 1e-12);

  const SignedLog lp = log_pochhammer(1.7, 2.6);
  CHECK(lp.value() == doctest::Approx(boost::math::tgamma(4.3) / boost::math::tgamma(1.7)).epsilon(1e-13));
  CHECK(log_pochhammer(-3.0, 5.0).sign == 0);
  CHECK(is_nonpositive_integer(-4.0));
  CHECK_FALSE(is_nonpositive_integer(-4.5));
  CHECK_FALSE(is_nonpositive_integer(1.0));
}

TEST_CASE("1F1 across its regimes against a wide-precision series") {
  const double params[][2] = {{0.5, 1.5}, {1.7, 2.4}, {2.2, 0.6}, {-1.3, 3.1}, {3.0, 7.5}};
  for (const auto& ab : params) {
    for (double x : {-45.0, -20.0, -5.0, -1.0, -0.1, 0.0, 0.3, 4.0, 30.0, 49.0}) {
      const double ref = oracle::hyp1f1_series<oracle::mp50>(ab[0], ab[1], x);
      CAPTURE(ab[0]);
      CAPTURE(ab[1]);
      CAPTURE(x);
      CHECK(oracle::rel_diff(kummer_1f1(ab[0], ab[1], x), ref) < 1e-12);
    }
    for (double x : {-300.0, -120.0, -60.0, 60.0, 120.0}) {
      const double ref = oracle::hyp1f1_series<oracle::mp150>(ab[0], ab[1], x);
      CAPTURE(x);
      CHECK(oracle::rel_diff(kummer_1f1(ab[0], ab[1], x), ref) < 1e-11);
    }
  }
}

TEST_CASE("1F1 special cases") {
  CHECK(kummer_1f1(1.3, 1.3, 2.0) == doctest::Approx(std::exp(2.0)).epsilon(1e-15));
  CHECK(kummer_1f1(0.0, 2.5, -7.0) == 1.0);
  // Laguerre-type terminating case 1F1(-3; b; x).
  const double b = 2.4;
  const double x = 5.0;
  const double poly = 1 - 3 * x / b + 3 * x * x / (b * (b + 1)) - x * x * x / (b * (b + 1) * (b + 2));
  CHECK(kummer_1f1(-3.0, b, x) == doctest::Approx(poly).epsilon(1e-14));
  CHECK(kummer_1f1(-3.0, b, -80.0) ==
        doctest::Approx(oracle::hyp1f1_series<oracle::mp50>(-3.0, b, -80.0)).epsilon(1e-14));
  // b - a = -2: e^x times a quadratic.
  CHECK(oracle::rel_diff(kummer_1f1(4.5, 2.5, -70.0),
                         oracle::hyp1f1_series<oracle::mp150>(4.5, 2.5, -70.0)) < 1e-12);
  CHECK_THROWS_AS(kummer_1f1(1.0, -2.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_1f1(1.0, 1.0, NAN), DomainError);
}

TEST_CASE("1F1 Kummer transformation holds") {
  for (double x : {-3.0, -17.0, -44.0}) {
    const double lhs = kummer_1f1(0.8, 2.9, x);
    const double rhs = std::exp(x) * kummer_1f1(2.9 - 0.8, 2.9, -x);
    CHECK(oracle::rel_diff(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("1F1 algebraic decay at large negative argument") {
  const double a = 0.75;
  const double b = 2.0;
  const double x = -200.0;
  const double lead = std::tgamma(b) / std::tgamma(b - a) * std::pow(-x, -a);
  CHECK(oracle::rel_diff(kummer_1f1(a, b, x), lead) < 5e-3);
}

TEST_CASE("Wright series") {
  // No gamma pairs: the exponential series.
  CHECK(wright_psi({}, 1.5) == doctest::Approx(std::exp(1.5)).epsilon(1e-15));
  // 1Psi1[(1,1); (beta,alpha)] is the two-parameter Mittag-Leffler function.
  const WrightSeriesSpec ml{{{1.0, 1.0}}, {{1.3, 0.7}}};
  CHECK(oracle::rel_diff(wright_psi(ml, -2.2),
                         oracle::wright({{1.0, 1.0}}, {{1.3, 0.7}}, -2.2)) < 1e-13);
  const WrightSeriesSpec two{{{2.0, 1.0}, {1.4, 1.0}}, {{0.9, 1.2}, {3.1, 1.0}}};
  CHECK(oracle::rel_diff(wright_psi(two, 0.8),
                         oracle::wright({{2.0, 1.0}, {1.4, 1.0}}, {{0.9, 1.2}, {3.1, 1.0}}, 0.8)) <
        1e-13);
  CHECK(two.convergence_margin() == doctest::Approx(1.2));
  const WrightSeriesSpec divergent{{{1.0, 2.0}}, {{1.0, 0.5}}};
  CHECK_THROWS_AS(divergent.validate(), DomainError);
  CHECK_THROWS_AS(wright_psi(divergent, 0.1), DomainError);
}

TEST_CASE("series driver") {
  const auto geo = sum_series([](int n) { return std::pow(0.5, n); }, SeriesControl{}, "geo");
  CHECK(geo.value == doctest::Approx(2.0).epsilon(1e-15));

  try {
    sum_series([](int) { return 1.0; }, SeriesControl{1e-16, 3, 50}, "harmonic");
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.partial_value() == 50.0);
  }
  CHECK_THROWS_AS(sum_series([](int n) { return std::pow(1e100, n); }, SeriesControl{}, "blowup"),
                  NonConvergenceError);
  CHECK_THROWS_AS((SeriesControl{-1.0}.validate()), DomainError);
}
