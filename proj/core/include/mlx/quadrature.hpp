#pragma once

// Double-exponential quadrature: tanh-sinh on finite intervals, exp-sinh on
// [a, inf). Both rules refine by halving the step in the transformed variable
// and reuse every previously evaluated node.

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace mlx {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_level = 12;  // levels past 16 add nothing in double precision and are clamped
  std::size_t max_evals = 2'000'000;

  // Throws DomainError when an invariant is violated.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Integrand that also receives the distances from the abscissa to the left
/// and right endpoints. Both are computed from the node tables directly, so
/// they keep full relative precision where `x - a` or `b - x` would cancel.
using GapIntegrand =
    std::function<double(double x, double left_gap, double right_gap)>;

/// Integrates f over (a, b). Integrable algebraic endpoint singularities are
/// allowed; f is never evaluated at a or b themselves.
///
/// Throws DomainError for a >= b and EvaluationError (carrying the abscissa)
/// when f is non-finite at a node whose contribution is not negligible.
/// An unreachable tolerance is reported through `converged == false`.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

QuadratureResult integrate_finite(const GapIntegrand& f, double a, double b,
                                  const QuadratureOptions& opts = {});

/// Integrates f over (a, inf). f must be absolutely integrable.
QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& opts = {});

/// As above; left_gap is x - a without cancellation and right_gap is +inf.
/// Use this form when f is singular at a != 0.
QuadratureResult integrate_semi_infinite(const GapIntegrand& f, double a,
                                         const QuadratureOptions& opts = {});

/// Several integrands over the same interval, evaluated together at each node
/// so that shared factors (an expensive kernel, say) are computed once.
using BatchIntegrand = std::function<void(double x, double left_gap, double right_gap,
                                          std::span<double> out)>;

struct BatchQuadratureResult {
  std::vector<double> values;
  std::vector<double> error_estimates;
  std::size_t evaluations = 0;
  // Every component met its tolerance.
  bool converged = false;
};

BatchQuadratureResult integrate_finite_batch(const BatchIntegrand& f, std::size_t width,
                                             double a, double b,
                                             const QuadratureOptions& opts = {});

/// Returns r.value, or throws NonConvergenceError naming `what`.
double require_converged(const QuadratureResult& r, std::string_view what);

}  // namespace mlx
