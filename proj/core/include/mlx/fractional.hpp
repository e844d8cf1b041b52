#pragma once

// Riemann-Liouville operators of negative order mu (the integral branch):
//
//   D^mu f(x)             = 1/Gamma(-mu) int_0^x f(t) (x-t)^(-mu-1) dt
//   D^{mu,p} f(x)         = ... * exp(-p x^2 / (t(x-t)))
//   D^{mu,p;lam,rho} f(x) = ... * 1F1(lam; rho; -p x^2 / (t(x-t)))

#include <functional>

#include "mlx/mittag_leffler.hpp"
#include "mlx/quadrature.hpp"

namespace mlx {

struct FracOrder {
  double mu = -1.0;  // < 0
  double p = 0.0;
  double lambda = 1.0;
  double rho = 1.0;

  void validate() const;
};

using RealFunction = std::function<double(double)>;

double rl_derivative(const RealFunction& f, double x, double mu,
                     const QuadratureOptions& opts = {});

double rl_extended(const RealFunction& f, double x, double mu, double p,
                   const QuadratureOptions& opts = {});

double rl_further_extended(const RealFunction& f, double x, const FracOrder& order,
                           const QuadratureOptions& opts = {});

/// Inputs of the fractional-derivative image check. `cml` is the Prabhakar
/// parameter of the function being differentiated; `mu` fills the c-slot of
/// the extended function on the right side (with gamma := delta).
struct PrabhakarImageArgs {
  double delta = 1.0;
  double mu = 2.0;
  double alpha = 1.0;
  double beta = 1.0;
  double cml = 2.0;
  double z = 0.5;
  double p = 0.0;
  double lambda = 1.0;
  double rho = 1.0;

  void validate() const;
};

/// Left side: D^{delta-mu,p;lam,rho} applied to t^(delta-1) E^cml_{alpha,beta}(t) at z.
double prabhakar_image_lhs(const PrabhakarImageArgs& args, const QuadratureOptions& opts = {},
                       const SeriesControl& ctl = {});

/// Right side: z^(mu-1) B(delta, cml-delta) / Gamma(mu-delta) E^{delta,mu;lam,rho}_{alpha,beta}(z;p).
double prabhakar_image_rhs(const PrabhakarImageArgs& args, const QuadratureOptions& opts = {},
                       const SeriesControl& ctl = {});

/// Compares both sides. The two agree only for cml = mu; otherwise the note
/// says so and the report is expected to fail.
CheckReport check_theorem_3_1(const PrabhakarImageArgs& args, double tol,
                              const QuadratureOptions& opts = {},
                              const SeriesControl& ctl = {});

}  // namespace mlx
