#include <doctest.h>

#include <cmath>

#include "mlx/errors.hpp"
#include "mlx/fractional.hpp"
#include "oracles/oracles.hpp"

using namespace mlx;

TEST_CASE("classical power rule") {
  for (double a : {0.0, 0.5, 1.0, 2.0, 3.7}) {
    for (double nu : {0.25, 0.5, 1.0, 1.8}) {
      CAPTURE(a);
      CAPTURE(nu);
      const double x = 1.7;
      const double got = rl_derivative([a](double t) { return std::pow(t, a); }, x, -nu);
      const double want = boost::math::tgamma(a + 1) / boost::math::tgamma(a + nu + 1) * std::pow(x, a + nu);
      CHECK(oracle::rel_diff(got, want) < 1e-10);
    }
  }
  // nu = 1 is plain integration.
  CHECK(rl_derivative([](double t) { return std::cos(t); }, 0.8, -1.0) ==
        doctest::Approx(std::sin(0.8)).epsilon(1e-12));
}

TEST_CASE("extended operators on powers reduce to extended beta values") {
  const double a = 0.6;
  const double mu = -0.7;
  const double x = 1.4;
  auto power = [a](double t) { return std::pow(t, a); };
  const double scale = std::pow(x, a - mu) / boost::math::tgamma(-mu);
  for (double p : {0.05, 0.5, 2.0}) {
    CAPTURE(p);
    CHECK(oracle::rel_diff(rl_extended(power, x, mu, p), scale * oracle::chaudhry_beta(a + 1, -mu, p)) <
          1e-9);
    CHECK(oracle::rel_diff(rl_further_extended(power, x, {mu, p, 1.6, 2.3}),
                           scale * oracle::ext_beta(a + 1, -mu, p, 1.6, 2.3)) < 1e-9);
  }
}

TEST_CASE("reductions of the extended operators") {
  auto f = [](double t) { return std::exp(-t) * (1 + t * t); };
  CHECK(oracle::rel_diff(rl_extended(f, 1.2, -0.4, 0.0), rl_derivative(f, 1.2, -0.4)) < 1e-12);
  CHECK(oracle::rel_diff(rl_further_extended(f, 1.2, {-0.4, 0.3, 1.7, 1.7}),
                         rl_extended(f, 1.2, -0.4, 0.3)) < 1e-10);
  CHECK(oracle::rel_diff(rl_further_extended(f, 1.2, {-0.4, 0.0, 1.1, 2.7}),
                         rl_derivative(f, 1.2, -0.4)) < 1e-12);
}

namespace {

// Term-wise image: sum (cml)_n / (Gamma(alpha n + beta) n!) z^(mu-1+n) B_p(delta+n, mu-delta) / Gamma(mu-delta).
double image_lhs_oracle(const PrabhakarImageArgs& a) {
  const double s = oracle::power_series(a.alpha, a.beta, a.z, [&](int n) {
    return oracle::rising(a.cml, n) * oracle::ext_beta(a.delta + n, a.mu - a.delta, a.p, a.lambda, a.rho);
  }, 80);
  return s * std::pow(a.z, a.mu - 1) / boost::math::tgamma(a.mu - a.delta);
}

}  // namespace

TEST_CASE("fractional image of the Prabhakar kernel") {
  const PrabhakarImageArgs args{0.9, 1.8, 0.8, 1.2, 1.8, 0.7, 0.4, 1.5, 2.2};
  const double lhs = prabhakar_image_lhs(args);
  CHECK(oracle::rel_diff(lhs, image_lhs_oracle(args)) < 1e-9);
  const CheckReport r = check_theorem_3_1(args, 1e-6);
  CHECK(r.passed);
  CHECK(r.note.find("requires") == std::string::npos);

  const PrabhakarImageArgs p0{0.7, 1.5, 1.1, 0.9, 1.5, 1.3, 0.0, 2.0, 0.8};
  CHECK(check_theorem_3_1(p0, 1e-6).passed);
}

TEST_CASE("mismatched Prabhakar parameter is reported") {
  const PrabhakarImageArgs args{0.9, 1.8, 0.8, 1.2, 2.6, 0.7, 0.4, 1.5, 2.2};
  CHECK(oracle::rel_diff(prabhakar_image_lhs(args), image_lhs_oracle(args)) < 1e-9);
  const CheckReport r = check_theorem_3_1(args, 1e-6);
  CHECK_FALSE(r.passed);
  CHECK(r.note.find("requires cml = mu") != std::string::npos);
}

TEST_CASE("domain checks") {
  auto f = [](double t) { return t; };
  CHECK_THROWS_AS(rl_derivative(f, 1.0, 0.5), DomainError);
  CHECK_THROWS_AS(rl_derivative(f, -1.0, -0.5), DomainError);
  CHECK_THROWS_AS(rl_extended(f, 1.0, -0.5, -1.0), DomainError);
  CHECK_THROWS_AS(rl_further_extended(f, 1.0, {-0.5, 0.1, 0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(prabhakar_image_lhs({1.0, 0.8}), DomainError);
}
