#pragma once

// Reference values for the tests. Nothing here calls into the library: the
// building blocks are Boost.Math, wide-precision floats and brute force.

#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using mp50 = boost::multiprecision::cpp_bin_float_50;
using mp150 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;

// Maclaurin series of 1F1 carried in Real. Real must have enough digits to
// absorb the e^|x| cancellation for negative x.
template <class Real = mp50>
double hyp1f1_series(double a, double b, double x) {
  const Real A = a, B = b, X = x;
  Real term = 1;
  Real sum = 1;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int n = 0; n < 200000; ++n) {
    term *= (A + n) * X / ((B + n) * (n + 1));
    sum += term;
    if (term == 0) break;
    if (n > std::abs(x) && abs(term) < eps * abs(sum)) break;
  }
  return static_cast<double>(sum);
}

// 1 / Gamma(x), zero at the poles.
inline double inv_gamma(double x) {
  if (x <= 0 && x == std::floor(x)) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

// 1F1(a; b; -z) for z >= 0. Far out the algebraic asymptotic series is used
// directly, where Boost would spend a long time.
inline double kummer_decay(double a, double b, double z) {
  if (z > 1e4) {
    long double s = 0.0L;
    long double t = 1.0L;
    for (int k = 0; k < 6; ++k) {
      s += t;
      t *= (a + k) * (a - b + 1 + k) / ((k + 1) * static_cast<long double>(z));
    }
    // With b - a a non-positive integer the algebraic part vanishes and what
    // remains is exponentially small.
    const long double lead = boost::math::tgamma(b) * inv_gamma(b - a);
    return static_cast<double>(lead * std::pow(static_cast<long double>(z), -a) * s);
  }
  return boost::math::hypergeometric_1F1(a, b, -z);
}

// int_0^1 t^(x-1) (1-t)^(y-1) K(t(1-t)) dt by Boost's tanh-sinh.
inline double kernel_beta(double x, double y, const std::function<double(double)>& kernel) {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts(15);
  auto f = [&](double t, double tc) {
    double left;
    double right;
    if (tc < 0) {
      left = -tc;
      right = 1.0 - left;
    } else {
      right = tc;
      left = 1.0 - right;
    }
    if (left <= 0 || right <= 0) return 0.0;
    const double v = std::pow(left, x - 1) * std::pow(right, y - 1) * kernel(left * right);
    (void)t;
    return std::isfinite(v) ? v : 0.0;
  };
  return ts.integrate(f, 0.0, 1.0, 1e-14);
}

inline double ext_beta(double x, double y, double p, double lam, double rho) {
  if (p == 0.0) return boost::math::beta(x, y);
  return kernel_beta(x, y, [=](double w) { return kummer_decay(lam, rho, p / w); });
}

inline double chaudhry_beta(double x, double y, double p) {
  return kernel_beta(x, y, [=](double w) { return std::exp(-p / w); });
}

// 1 / Gamma(v) for v > 0 in long double.
inline long double rgamma(long double v) { return std::exp(-std::lgamma(v)); }

// sum_n coef(n) z^n / (Gamma(alpha n + beta) n!) until the terms vanish.
template <class Coef>
double power_series(double alpha, double beta, double z, Coef coef, int n_max = 400) {
  long double sum = 0.0L;
  long double zn_fact = 1.0L;  // z^n / n!
  int small = 0;
  for (int n = 0; n < n_max; ++n) {
    if (n > 0) zn_fact *= static_cast<long double>(z) / n;
    const long double t = coef(n) * zn_fact * rgamma(static_cast<long double>(alpha) * n + beta);
    sum += t;
    if (std::abs(t) < 1e-20L * std::abs(sum) && n > 3) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return static_cast<double>(sum);
}

inline long double rising(long double d, int n) {
  long double r = 1.0L;
  for (int k = 0; k < n; ++k) r *= d + k;
  return r;
}

inline double prabhakar(double rho, double sigma, double delta, double z) {
  return power_series(rho, sigma, z, [=](int n) { return rising(delta, n); });
}

// (delta)_{nq} for delta > 0.
inline double shukla(double rho, double sigma, double delta, double q, double z) {
  return power_series(rho, sigma, z, [=](int n) {
    return std::exp(std::lgamma(static_cast<long double>(delta) + n * q) -
                    std::lgamma(static_cast<long double>(delta)));
  });
}

inline double extended_oy(double rho, double sigma, double delta, double c, double z, double p) {
  const double b0 = boost::math::beta(delta, c - delta);
  return power_series(rho, sigma, z, [=](int n) {
    return chaudhry_beta(delta + n, c - delta, p) / b0 * rising(c, n);
  }, 80);
}

inline double extended_ml(double alpha, double beta, double gamma, double c, double lam,
                          double rho, double p, double z) {
  const double b0 = boost::math::beta(gamma, c - gamma);
  return power_series(alpha, beta, z, [=](int n) {
    return ext_beta(gamma + n, c - gamma, p, lam, rho) / b0 * rising(c, n);
  }, 80);
}

// int_0^inf u^(s-1) 1F1(lam; rho; -u) du by the trapezoid rule in v = ln u on
// [-V, V] with 2N panels, plus the analytic head (1F1 ~ 1) and tail
// (1F1 ~ Gamma(rho)/Gamma(rho-lam) u^-lam).
inline double ext_gamma_bruteforce(double s, double lam, double rho, double V = 40.0,
                                   int N = 40000) {
  const double h = V / N;
  long double sum = 0.0L;
  for (int i = -N; i <= N; ++i) {
    const double v = i * h;
    const double u = std::exp(v);
    const long double w = (i == -N || i == N) ? 0.5L : 1.0L;
    sum += w * std::exp(s * v) * kummer_decay(lam, rho, u);
  }
  sum *= h;
  const double head = std::exp(-V * s) / s;
  const double lead = boost::math::tgamma(rho) * inv_gamma(rho - lam);
  const double tail = lead * std::exp(V * (s - lam)) / (lam - s);
  return static_cast<double>(sum) + head + tail;
}

// Composite midpoint rule.
inline double midpoint(const std::function<double(double)>& f, double a, double b,
                       long n = 1'000'000) {
  const long double h = (static_cast<long double>(b) - a) / n;
  long double sum = 0.0L;
  for (long i = 0; i < n; ++i) sum += f(static_cast<double>(a + (i + 0.5L) * h));
  return static_cast<double>(sum * h);
}

// Fourth-order central difference.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12.0 * h);
}

// pPsi_q by direct summation with Boost gamma functions.
struct Pair {
  double offset;
  double scale;
};

inline double wright(std::initializer_list<Pair> upper, std::initializer_list<Pair> lower,
                     double z) {
  long double sum = 0.0L;
  long double fact = 1.0L;
  int small = 0;
  for (int n = 0; n < 2000; ++n) {
    if (n > 0) fact *= static_cast<long double>(z) / n;
    long double t = fact;
    for (const auto& p : upper) t *= boost::math::tgamma(static_cast<long double>(p.offset) + p.scale * n);
    for (const auto& p : lower) t /= boost::math::tgamma(static_cast<long double>(p.offset) + p.scale * n);
    sum += t;
    if (std::abs(t) < 1e-20L * std::abs(sum)) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return static_cast<double>(sum);
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

}  // namespace oracle
