#pragma once

// The Mittag-Leffler family on the real line:
//
//   E_rho(z)                   sum z^n / Gamma(rho n + 1)
//   E_{rho,sigma}(z)           sum z^n / Gamma(rho n + sigma)
//   E^delta_{rho,sigma}(z)     sum (delta)_n z^n / (Gamma(rho n + sigma) n!)       (Prabhakar)
//   E^{delta,q}_{rho,sigma}(z) sum (delta)_{nq} z^n / (Gamma(rho n + sigma) n!)
//   E^{delta;c}_{rho,sigma}(z;p)
//       sum B_p(delta+n, c-delta)/B(delta, c-delta) (c)_n z^n / (Gamma(rho n + sigma) n!)
//   E^{gamma,c;lam,rho}_{alpha,beta}(z;p)
//       sum B_p^{lam,rho}(gamma+n, c-gamma)/B(gamma, c-gamma) (c)_n z^n / (Gamma(alpha n + beta) n!)
//
// together with three integral representations of the last one, its
// derivatives, and numeric checks of identities stated for it.

#include <string>

#include "mlx/quadrature.hpp"
#include "mlx/special.hpp"

namespace mlx {

struct ExtendedMLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double c = 2.0;
  double lambda = 1.0;
  double rho = 1.0;
  double p = 0.0;

  /// c > gamma > 0, alpha > 0, beta > 0, lam > 0, rho > 0, p >= 0.
  void validate() const;
};

/// Outcome of evaluating both sides of an identity.
struct CheckReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::string note;

  /// rel_gap = |lhs - rhs| / max(|lhs|, |rhs|, 1e-300); passed iff rel_gap <= tol.
  static CheckReport compare(double lhs, double rhs, double tol, std::string note = {});
};

double ml_classic(double rho, double z, const SeriesControl& ctl = {});
double ml_two_param(double rho, double sigma, double z, const SeriesControl& ctl = {});
double ml_prabhakar(double rho, double sigma, double delta, double z,
                    const SeriesControl& ctl = {});
double ml_shukla(double rho, double sigma, double delta, double q, double z,
                 const SeriesControl& ctl = {});
double ml_extended_oy(double rho, double sigma, double delta, double c, double z, double p,
                      const SeriesControl& ctl = {}, const QuadratureOptions& opts = {});

double ml_ext_series(const ExtendedMLParams& params, double z, const SeriesControl& ctl = {},
                     const QuadratureOptions& opts = {});

/// Integral over t in (0, 1) with the Prabhakar function E^c_{alpha,beta}(tz)
/// under a kernel-weighted beta density.
double ml_ext_integral(const ExtendedMLParams& params, double z,
                       const QuadratureOptions& opts = {}, const SeriesControl& ctl = {});

/// Same integral after t = u / (1 + u), over u in (0, inf).
double ml_ext_integral_semiinf(const ExtendedMLParams& params, double z,
                               const QuadratureOptions& opts = {},
                               const SeriesControl& ctl = {});

/// Same integral after t = sin^2(theta), over theta in (0, pi/2).
double ml_ext_integral_trig(const ExtendedMLParams& params, double z,
                            const QuadratureOptions& opts = {}, const SeriesControl& ctl = {});

/// n-th derivative in z by term-wise differentiation of the series.
double ml_ext_derivative(const ExtendedMLParams& params, double z, int n,
                         const SeriesControl& ctl = {}, const QuadratureOptions& opts = {});

/// E_{alpha,beta} = beta E_{alpha,beta+1} + alpha z d/dz E_{alpha,beta+1}.
CheckReport check_recurrence(const ExtendedMLParams& params, double z, double tol,
                             const SeriesControl& ctl = {}, const QuadratureOptions& opts = {});

/// d/dz E^{gamma,c;lam,rho}_{alpha,beta} = gamma E^{gamma+1,c+1;lam,rho}_{alpha,alpha+beta},
/// the identity produced by term-wise differentiation.
CheckReport check_first_derivative(const ExtendedMLParams& params, double z, double tol,
                                   const SeriesControl& ctl = {},
                                   const QuadratureOptions& opts = {});

/// Measures the gap in the claimed formula
///   d^n/dz^n E = (c)_n (lam)_n / (rho)_n E^{gamma+n,c+n;lam+n,rho+n}_{alpha,beta+n alpha}.
/// The report is informational; `passed` only reflects the measured gap.
CheckReport claim_check_theorem_3_2(const ExtendedMLParams& params, double z, int n, double tol,
                                    const SeriesControl& ctl = {},
                                    const QuadratureOptions& opts = {});

/// Measures the gap in the claimed formula
///   d^n/dz^n [z^(beta-1) E(mu z^alpha)] = z^(beta-n-1) E^{gamma+n,c+n;lam+n,rho+n}_{alpha,beta-n}(mu z^alpha).
/// Requires z > 0 and beta - n > 0.
CheckReport claim_check_theorem_3_3(const ExtendedMLParams& params, double mu, double z, int n,
                                    double tol, const SeriesControl& ctl = {},
                                    const QuadratureOptions& opts = {});

/// Same left side as claim_check_theorem_3_3, compared with the
/// unshifted-parameter right side z^(beta-n-1) E^{gamma,c;lam,rho}_{alpha,beta-n}(mu z^alpha).
CheckReport check_power_derivative(const ExtendedMLParams& params, double mu, double z, int n,
                                   double tol, const SeriesControl& ctl = {},
                                   const QuadratureOptions& opts = {});

}  // namespace mlx
