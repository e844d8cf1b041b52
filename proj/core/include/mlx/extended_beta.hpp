#pragma once

// Extended beta functions
//
//   B_p(x, y)          = int_0^1 t^(x-1) (1-t)^(y-1) exp(-p / (t(1-t))) dt
//   B_p^{lam,rho}(x,y) = int_0^1 t^(x-1) (1-t)^(y-1) 1F1(lam; rho; -p / (t(1-t))) dt
//
// and the extended gamma function
//
//   Gamma^{lam,rho}(s) = int_0^inf u^(s-1) 1F1(lam; rho; -u) du,   0 < s < lam.
//
// B-type integrals span many decades as p grows, so their quadratures use a
// purely relative stopping criterion (abs_tol is ignored).

#include <cstddef>
#include <mutex>
#include <vector>

#include "mlx/quadrature.hpp"

namespace mlx {

struct ExtendedBetaArgs {
  double x = 1.0;
  double y = 1.0;
  double p = 0.0;
  double lambda = 1.0;
  double rho = 1.0;

  void validate() const;
};

/// Regularizing factor applied to the beta integrand, as a function of
/// w = t(1-t).
class BetaKernel {
 public:
  static BetaKernel kummer(double p, double lambda, double rho);
  static BetaKernel exponential(double p);

  double operator()(double w) const;
  double p() const { return p_; }

 private:
  enum class Kind { kummer, exponential };
  BetaKernel(Kind kind, double p, double lambda, double rho)
      : kind_(kind), p_(p), lambda_(lambda), rho_(rho) {}

  Kind kind_;
  double p_;
  double lambda_;
  double rho_;
};

/// B_p^{lam,rho}(x, y). p = 0 returns beta(x, y) without quadrature.
double extended_beta(const ExtendedBetaArgs& args, const QuadratureOptions& opts = {});

/// B_p(x, y). p = 0 returns beta(x, y) without quadrature.
double chaudhry_beta(double x, double y, double p, const QuadratureOptions& opts = {});

/// The kernel-weighted beta integral, always through quadrature (used to check
/// the p = 0 short circuit).
QuadratureResult kernel_beta_quadrature(double x, double y, const BetaKernel& kernel,
                                        const QuadratureOptions& opts = {});

/// Gamma^{lam,rho}(s) by exp-sinh quadrature. DomainError outside 0 < s < lam.
double extended_gamma(double s, double lambda, double rho, const QuadratureOptions& opts = {});

/// Gamma(s) Gamma(lam-s) Gamma(rho) / (Gamma(lam) Gamma(rho-s)). PoleError when
/// rho - s is a non-positive integer.
double extended_gamma_closed_form(double s, double lambda, double rho);

/// Memoized values B^{kernel}(x0 + n, y), n = 0, 1, 2, ... Terms are computed in
/// blocks that share one kernel evaluation per quadrature node. Safe for
/// concurrent use; every caller observes identical values.
class BetaSequence {
 public:
  BetaSequence(double x0, double y, BetaKernel kernel, QuadratureOptions opts = {});

  double operator()(int n) const;

  double x0() const { return x0_; }
  double y() const { return y_; }

 private:
  void extend_to(std::size_t n) const;

  double x0_;
  double y_;
  BetaKernel kernel_;
  QuadratureOptions opts_;
  mutable std::mutex mutex_;
  mutable std::vector<double> values_;
};

}  // namespace mlx
