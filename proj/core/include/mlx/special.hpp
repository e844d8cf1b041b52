#pragma once

// Baseline special functions on the real line: gamma, beta, Pochhammer,
// Kummer's confluent hypergeometric 1F1 and the Wright generalized
// hypergeometric series pPsi_q.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mlx/errors.hpp"

namespace mlx {

/// Truncation rule shared by every series in the library: stop once
/// `consecutive_small` successive non-increasing terms fall below
/// rel_tol * |partial sum|.
struct SeriesControl {
  double rel_tol = 1e-16;
  int consecutive_small = 3;
  int n_max = 10000;

  void validate() const;
};

/// log|x| together with the sign of x.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Gamma(x) for real x off the poles; PoleError at 0, -1, -2, ...
double gamma_fn(double x);

/// ln|Gamma(x)| with the sign of Gamma(x); PoleError at the poles.
SignedLog signed_log_gamma(double x);

/// B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y), computed in log space.
double beta(double x, double y);
double log_beta(double x, double y);

/// Rising factorial (delta)_n.
double pochhammer(double delta, int n);

/// (delta)_q = Gamma(delta + q) / Gamma(delta) for real q >= 0, in signed log
/// form. Integer q goes through the exact product, so zero factors give an
/// exact zero (log_abs = -inf).
SignedLog log_pochhammer(double delta, double q);

bool is_nonpositive_integer(double x);

/// Confluent hypergeometric function 1F1(a; b; x).
///
/// Regimes: the Maclaurin series on [0, 50]; Kummer's transformation
/// 1F1(a;b;x) = e^x 1F1(b-a;b;-x) on (-50, 0); the algebraic asymptotic
/// expansion, truncated at its smallest term, for x <= -50 (and, through the
/// transformation, for x > 50). Terminating cases (a or b-a a non-positive
/// integer) are summed exactly.
///
/// Throws DomainError when b is a non-positive integer and AccuracyLossError
/// when the asymptotic expansion cannot reach double precision and no series
/// fallback is available.
double kummer_1f1(double a, double b, double x);

/// Plain Maclaurin summation of 1F1, valid for any x but subject to
/// cancellation for large negative x.
double kummer_1f1_series(double a, double b, double x);

struct WrightPair {
  double offset;  // alpha_i or beta_j
  double scale;   // A_i or B_j, > 0
};

struct WrightSeriesSpec {
  std::vector<WrightPair> upper;
  std::vector<WrightPair> lower;

  /// 1 + sum(B_j) - sum(A_i).
  double convergence_margin() const;
  void validate() const;
};

/// pPsi_q(z) = sum_n prod Gamma(alpha_i + A_i n) / prod Gamma(beta_j + B_j n) z^n / n!
double wright_psi(const WrightSeriesSpec& spec, double z, const SeriesControl& ctl = {});

struct SeriesSum {
  double value = 0.0;
  int terms = 0;
};

/// Sums term(0), term(1), ... under `ctl`. Throws NonConvergenceError carrying
/// the partial sum when n_max terms are exhausted.
template <class Term>
SeriesSum sum_series(Term&& term, const SeriesControl& ctl, std::string_view what);

namespace detail {
[[noreturn]] void throw_series_exhausted(std::string_view what, double partial, int n_max);
[[noreturn]] void throw_series_overflow(std::string_view what, int n);
}

template <class Term>
SeriesSum sum_series(Term&& term, const SeriesControl& ctl, std::string_view what) {
  ctl.validate();
  double sum = 0.0;
  double prev_abs = 0.0;
  int small = 0;
  for (int n = 0; n < ctl.n_max; ++n) {
    const double t = term(n);
    sum += t;
    if (sum - sum != 0.0) detail::throw_series_overflow(what, n);
    const double a = t < 0 ? -t : t;
    const double s = sum < 0 ? -sum : sum;
    if (n > 0 && a <= ctl.rel_tol * s && a <= prev_abs) {
      if (++small >= ctl.consecutive_small) return {sum, n + 1};
    } else {
      small = 0;
    }
    prev_abs = a;
  }
  detail::throw_series_exhausted(what, sum, ctl.n_max);
}

}  // namespace mlx
