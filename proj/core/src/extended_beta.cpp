#include "mlx/extended_beta.hpp"

#include <cmath>
#include <sstream>

#include "mlx/errors.hpp"
#include "mlx/special.hpp"

namespace mlx {
namespace {

constexpr std::size_t kBlock = 16;

QuadratureOptions relative_only(QuadratureOptions opts) {
  opts.abs_tol = 0.0;
  return opts;
}

void check_beta_domain(double x, double y, double p, const char* fn) {
  if (!(x > 0.0) || !(y > 0.0) || !(p >= 0.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << fn << ": requires x > 0, y > 0, p >= 0 (got x=" << x << ", y=" << y << ", p=" << p
       << ")";
    throw DomainError(os.str());
  }
}

void check_strip(double s, double lambda, double rho) {
  if (!(lambda > 0.0) || !(rho > 0.0)) {
    throw DomainError("extended_gamma: requires lam > 0 and rho > 0");
  }
  if (!(s > 0.0) || !(s < lambda)) {
    std::ostringstream os;
    os << "extended_gamma: s = " << s << " outside the convergence strip 0 < s < lam = "
       << lambda;
    throw DomainError(os.str());
  }
}

}  // namespace

void ExtendedBetaArgs::validate() const {
  check_beta_domain(x, y, p, "extended_beta");
  if (!(lambda > 0.0) || !(rho > 0.0)) {
    throw DomainError("extended_beta: requires lam > 0 and rho > 0");
  }
}

BetaKernel BetaKernel::kummer(double p, double lambda, double rho) {
  return {Kind::kummer, p, lambda, rho};
}

BetaKernel BetaKernel::exponential(double p) { return {Kind::exponential, p, 1.0, 1.0}; }

double BetaKernel::operator()(double w) const {
  if (p_ == 0.0) return 1.0;
  const double arg = -p_ / w;
  return kind_ == Kind::exponential ? std::exp(arg) : kummer_1f1(lambda_, rho_, arg);
}

QuadratureResult kernel_beta_quadrature(double x, double y, const BetaKernel& kernel,
                                        const QuadratureOptions& opts) {
  check_beta_domain(x, y, kernel.p(), "kernel_beta_quadrature");
  return integrate_finite(
      [&](double, double t, double tc) {
        return std::pow(t, x - 1.0) * std::pow(tc, y - 1.0) * kernel(t * tc);
      },
      0.0, 1.0, relative_only(opts));
}

double extended_beta(const ExtendedBetaArgs& args, const QuadratureOptions& opts) {
  args.validate();
  if (args.p == 0.0) return beta(args.x, args.y);
  return require_converged(
      kernel_beta_quadrature(args.x, args.y, BetaKernel::kummer(args.p, args.lambda, args.rho),
                             opts),
      "extended_beta");
}

double chaudhry_beta(double x, double y, double p, const QuadratureOptions& opts) {
  check_beta_domain(x, y, p, "chaudhry_beta");
  if (p == 0.0) return beta(x, y);
  return require_converged(kernel_beta_quadrature(x, y, BetaKernel::exponential(p), opts),
                           "chaudhry_beta");
}

double extended_gamma(double s, double lambda, double rho, const QuadratureOptions& opts) {
  check_strip(s, lambda, rho);
  const auto r = integrate_semi_infinite(
      [&](double u) { return std::pow(u, s - 1.0) * kummer_1f1(lambda, rho, -u); }, 0.0, opts);
  return require_converged(r, "extended_gamma");
}

double extended_gamma_closed_form(double s, double lambda, double rho) {
  check_strip(s, lambda, rho);
  if (is_nonpositive_integer(rho - s)) {
    std::ostringstream os;
    os << "extended_gamma_closed_form: Gamma(rho - s) has a pole at rho - s = " << rho - s;
    throw PoleError(os.str());
  }
  const SignedLog den = signed_log_gamma(rho - s);
  const double log_abs =
      log_gamma(s) + log_gamma(lambda - s) + log_gamma(rho) - log_gamma(lambda) - den.log_abs;
  return den.sign * std::exp(log_abs);
}

BetaSequence::BetaSequence(double x0, double y, BetaKernel kernel, QuadratureOptions opts)
    : x0_(x0), y_(y), kernel_(kernel), opts_(relative_only(opts)) {
  check_beta_domain(x0, y, kernel.p(), "BetaSequence");
  opts_.validate();
}

double BetaSequence::operator()(int n) const {
  if (n < 0) throw DomainError("BetaSequence: index must be >= 0");
  const auto idx = static_cast<std::size_t>(n);
  std::lock_guard lock(mutex_);
  if (idx >= values_.size()) extend_to(idx);
  return values_[idx];
}

void BetaSequence::extend_to(std::size_t n) const {
  while (values_.size() <= n) {
    const std::size_t first = values_.size();
    if (kernel_.p() == 0.0) {
      values_.push_back(beta(x0_ + static_cast<double>(first), y_));
      continue;
    }
    const auto r = integrate_finite_batch(
        [&](double, double t, double tc, std::span<double> out) {
          const double base = std::pow(t, x0_ - 1.0 + static_cast<double>(first)) *
                              std::pow(tc, y_ - 1.0) * kernel_(t * tc);
          double v = base;
          for (double& o : out) {
            o = v;
            v *= t;
          }
        },
        kBlock, 0.0, 1.0, opts_);
    if (!r.converged) {
      std::ostringstream os;
      os << "BetaSequence: quadrature for terms " << first << ".." << first + kBlock - 1
         << " did not converge";
      throw NonConvergenceError(os.str(), r.values.front());
    }
    values_.insert(values_.end(), r.values.begin(), r.values.end());
  }
}

}  // namespace mlx
