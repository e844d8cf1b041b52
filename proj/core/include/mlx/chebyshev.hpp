#pragma once

#include <functional>
#include <vector>

namespace mlx {

// Chebyshev interpolant of a smooth function on [a, b], sampled once at the
// Chebyshev points of the first kind and evaluated by Clenshaw recurrence.
// Immutable after construction.
class ChebyshevApprox {
 public:
  ChebyshevApprox(const std::function<double(double)>& f, double a, double b, int degree);

  double operator()(double x) const;

  double lower() const { return a_; }
  double upper() const { return b_; }
  // Magnitude of the trailing coefficients; a cheap bound on the truncation error.
  double tail() const;

 private:
  double a_;
  double b_;
  std::vector<double> coef_;
};

}  // namespace mlx
