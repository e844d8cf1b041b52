#include "mlx/mellin.hpp"

#include <cmath>
#include <sstream>

#include "mlx/errors.hpp"
#include "mlx/extended_beta.hpp"

namespace mlx {

void MellinPoint::validate() const {
  ExtendedMLParams base = params;
  base.p = 0.0;
  base.validate();
  if (!(s > 0.0) || !(s < params.lambda)) {
    std::ostringstream os;
    os << "MellinPoint: s = " << s << " outside the convergence strip 0 < s < lam = "
       << params.lambda;
    throw DomainError(os.str());
  }
  if (!(params.gamma + s > 0.0) || !(params.c + 2.0 * s - params.gamma > 0.0)) {
    throw DomainError("MellinPoint: requires gamma + s > 0 and c + 2s - gamma > 0");
  }
  if (!std::isfinite(z)) throw DomainError("MellinPoint: z must be finite");
}

WrightSeriesSpec mellin_wright_spec(const MellinPoint& pt) {
  const auto& q = pt.params;
  return {{{q.c, 1.0}, {q.gamma + pt.s, 1.0}}, {{q.beta, q.alpha}, {q.c + 2.0 * pt.s, 1.0}}};
}

double mellin_prefactor(const MellinPoint& pt) {
  pt.validate();
  const auto& q = pt.params;
  const double g = extended_gamma_closed_form(pt.s, q.lambda, q.rho);
  return g * std::exp(log_gamma(q.c + pt.s - q.gamma) - log_gamma(q.gamma) -
                      log_gamma(q.c - q.gamma));
}

double mellin_closed_form(const MellinPoint& pt, const SeriesControl& ctl,
                          const QuadratureOptions&) {
  const double pre = mellin_prefactor(pt);
  return pre * wright_psi(mellin_wright_spec(pt), pt.z, ctl);
}

QuadratureResult mellin_numeric(const MellinPoint& pt, const SeriesControl& ctl,
                                const QuadratureOptions& opts) {
  pt.validate();
  ExtendedMLParams q = pt.params;
  return integrate_semi_infinite(
      [&](double p) {
        ExtendedMLParams at = q;
        at.p = p;
        return std::pow(p, pt.s - 1.0) * ml_ext_series(at, pt.z, ctl, opts);
      },
      0.0, opts);
}

CheckReport check_mellin(const MellinPoint& pt, double tol, const SeriesControl& ctl,
                         const QuadratureOptions& opts) {
  pt.validate();
  const double closed = mellin_closed_form(pt, ctl, opts);
  const double numeric = require_converged(mellin_numeric(pt, ctl, opts), "mellin_numeric");
  return CheckReport::compare(numeric, closed, tol, "lower Wright pair taken as (beta, alpha)");
}

}  // namespace mlx
