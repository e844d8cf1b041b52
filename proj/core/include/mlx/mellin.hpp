#pragma once

// Mellin transform, in the extension parameter p, of the extended
// Mittag-Leffler function:
//
//   M(s) = int_0^inf p^(s-1) E^{gamma,c;lam,rho}_{alpha,beta}(z; p) dp
//        = Gamma^{lam,rho}(s) Gamma(c+s-gamma) / (Gamma(gamma) Gamma(c-gamma))
//          * 2Psi2[(c,1), (gamma+s,1); (beta,alpha), (c+2s,1); z]

#include "mlx/mittag_leffler.hpp"
#include "mlx/quadrature.hpp"
#include "mlx/special.hpp"

namespace mlx {

struct MellinPoint {
  double s = 1.0;
  ExtendedMLParams params;  // params.p is ignored: p is the integration variable
  double z = 0.0;

  /// 0 < s < lam, gamma + s > 0, c + 2s - gamma > 0, plus params.validate().
  void validate() const;
};

/// Wright function specification of the closed form: upper pairs (c,1),
/// (gamma+s,1); lower pairs (beta,alpha), (c+2s,1).
WrightSeriesSpec mellin_wright_spec(const MellinPoint& pt);

/// Gamma^{lam,rho}(s) Gamma(c+s-gamma) / (Gamma(gamma) Gamma(c-gamma)).
double mellin_prefactor(const MellinPoint& pt);

double mellin_closed_form(const MellinPoint& pt, const SeriesControl& ctl = {},
                          const QuadratureOptions& opts = {});

/// Direct exp-sinh quadrature over p, re-evaluating the extended series at
/// every node.
QuadratureResult mellin_numeric(const MellinPoint& pt, const SeriesControl& ctl = {},
                                const QuadratureOptions& opts = {});

/// Runs both paths. DomainError (no report) when the point is outside the strip.
CheckReport check_mellin(const MellinPoint& pt, double tol, const SeriesControl& ctl = {},
                         const QuadratureOptions& opts = {});

}  // namespace mlx
