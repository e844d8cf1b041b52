#include <doctest.h>

#include <cmath>

#include "mlx/errors.hpp"
#include "mlx/mellin.hpp"
#include "oracles/oracles.hpp"

using namespace mlx;

namespace {

double prefactor_oracle(double s, const ExtendedMLParams& e) {
  using boost::math::tgamma;
  return tgamma(s) * tgamma(e.lambda - s) * tgamma(e.rho) / (tgamma(e.lambda) * tgamma(e.rho - s)) *
         tgamma(e.c + s - e.gamma) / (tgamma(e.gamma) * tgamma(e.c - e.gamma));
}

}  // namespace

TEST_CASE("Wright specification of the closed form") {
  const MellinPoint pt{0.6, {0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.0}, 0.4};
  const WrightSeriesSpec w = mellin_wright_spec(pt);
  REQUIRE(w.upper.size() == 2);
  REQUIRE(w.lower.size() == 2);
  CHECK(w.upper[0].offset == 2.1);
  CHECK(w.upper[1].offset == doctest::Approx(1.3));
  CHECK(w.lower[0].offset == 1.3);
  CHECK(w.lower[0].scale == 0.8);
  CHECK(w.lower[1].offset == doctest::Approx(3.3));
}

TEST_CASE("closed form against independent gamma and Wright sums") {
  const ExtendedMLParams e{0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.0};
  for (double s : {0.4, 0.9, 1.3}) {
    for (double z : {-0.9, 0.0, 0.6}) {
      CAPTURE(s);
      CAPTURE(z);
      const MellinPoint pt{s, e, z};
      const double ref =
          prefactor_oracle(s, e) *
          oracle::wright({{e.c, 1.0}, {e.gamma + s, 1.0}}, {{e.beta, e.alpha}, {e.c + 2 * s, 1.0}}, z);
      CHECK(oracle::rel_diff(mellin_closed_form(pt), ref) < 1e-12);
    }
  }
}

TEST_CASE("s = 1 prefactor") {
  // Gamma^{3,2}(1) = Gamma(2) Gamma(2) / (Gamma(3) Gamma(1)) = 1/2.
  const MellinPoint pt{1.0, {1.0, 1.0, 1.0, 2.0, 3.0, 2.0, 0.0}, 0.0};
  CHECK(mellin_prefactor(pt) == doctest::Approx(0.5 * std::tgamma(2.0) / std::tgamma(1.0)).epsilon(1e-14));
}

TEST_CASE("numeric transform matches the closed form") {
  const MellinPoint pt{0.9, {0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.0}, -0.6};
  const CheckReport r = check_mellin(pt, 1e-6);
  CHECK(r.passed);
  CHECK(r.rel_gap < 1e-8);
  const auto q = mellin_numeric(pt);
  CHECK(q.converged);
}

TEST_CASE("strip and parameter checks") {
  const ExtendedMLParams e{0.8, 1.3, 0.7, 2.1, 1.7, 2.4, 0.0};
  CHECK_THROWS_AS(mellin_closed_form({1.7, e, 0.1}), DomainError);
  CHECK_THROWS_AS(mellin_closed_form({0.0, e, 0.1}), DomainError);
  CHECK_THROWS_AS(check_mellin({2.5, e, 0.1}, 1e-6), DomainError);
  CHECK_THROWS_AS(mellin_numeric({0.5, e, NAN}), DomainError);
}
