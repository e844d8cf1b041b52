#include "mlx/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "mlx/errors.hpp"

namespace mlx {

ChebyshevApprox::ChebyshevApprox(const std::function<double(double)>& f, double a, double b,
                                 int degree)
    : a_(a), b_(b) {
  if (!(a < b)) throw DomainError("ChebyshevApprox: requires a < b");
  if (degree < 1) throw DomainError("ChebyshevApprox: degree must be >= 1");
  const int n = degree + 1;
  std::vector<double> samples(n);
  for (int k = 0; k < n; ++k) {
    const double x = std::cos(std::numbers::pi * (k + 0.5) / n);
    samples[k] = f(0.5 * (a + b) + 0.5 * (b - a) * x);
  }
  coef_.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += samples[k] * std::cos(std::numbers::pi * j * (k + 0.5) / n);
    coef_[j] = 2.0 * s / n;
  }
  coef_[0] *= 0.5;
}

double ChebyshevApprox::operator()(double x) const {
  const double u = (2.0 * x - a_ - b_) / (b_ - a_);
  double b1 = 0.0;
  double b2 = 0.0;
  for (auto it = coef_.rbegin(); it != coef_.rend() - 1; ++it) {
    const double b0 = 2.0 * u * b1 - b2 + *it;
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + coef_.front();
}

double ChebyshevApprox::tail() const {
  const auto n = coef_.size();
  return std::abs(coef_[n - 1]) + std::abs(coef_[n - 2]);
}

}  // namespace mlx
