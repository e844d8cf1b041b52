#include "mlx/special.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mlx {
namespace {

constexpr double kRegimeSwitch = 50.0;
// Beyond this |x| the e^|x| factor of the Kummer series fallback overflows.
constexpr double kFallbackLimit = 500.0;
constexpr double kSeriesEps = 1e-17;
constexpr double kAsymEps = 1e-15;
constexpr int kMaxSeriesTerms = 20000;
constexpr int kExactProductLimit = 64;

std::string format_args(std::string_view fn, double a, double b, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << "(" << a << ", " << b << ", " << x << ")";
  return os.str();
}

struct Asymptotic {
  double value;
  bool accurate;
};

// 1F1(a; b; -y) ~ Gamma(b)/Gamma(b-a) y^-a sum_s (a)_s (a-b+1)_s / s! y^-s for
// y -> +inf. The exponentially small companion term
// Gamma(b)/Gamma(a) e^-y y^(a-b) is dropped; `accurate` is false when its size
// relative to the algebraic term, or the smallest retained term, exceeds
// kAsymEps.
Asymptotic asymptotic_negative(double a, double b, double y) {
  const SignedLog gb = signed_log_gamma(b);
  const SignedLog gba = signed_log_gamma(b - a);
  const double c = a - b + 1.0;

  double term = 1.0;
  double sum = 1.0;
  bool accurate = false;
  for (int s = 0; s < kMaxSeriesTerms; ++s) {
    const double next = term * (a + s) * (c + s) / ((s + 1.0) * y);
    if (next == 0.0) {
      accurate = true;
      break;
    }
    if (std::abs(next) > std::abs(term)) {
      accurate = std::abs(term) <= kAsymEps * std::abs(sum);
      break;
    }
    sum += next;
    term = next;
    if (std::abs(term) <= kSeriesEps * std::abs(sum)) {
      accurate = true;
      break;
    }
  }

  const double value =
      gb.sign * gba.sign * std::exp(gb.log_abs - gba.log_abs - a * std::log(y)) * sum;

  if (!is_nonpositive_integer(a) && std::isfinite(y)) {
    const SignedLog ga = signed_log_gamma(a);
    const double log_ratio = gba.log_abs - ga.log_abs - y + (2.0 * a - b) * std::log(y);
    if (log_ratio > std::log(kAsymEps)) accurate = false;
  }
  return {value, accurate};
}

double checked(double v, double a, double b, double x) {
  if (!std::isfinite(v)) {
    throw DomainError(format_args("kummer_1f1", a, b, x) + ": result outside double range");
  }
  return v;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be > 0");
  if (consecutive_small < 1) throw DomainError("SeriesControl: consecutive_small must be >= 1");
  if (n_max < consecutive_small) throw DomainError("SeriesControl: n_max must be >= consecutive_small");
}

namespace detail {
void throw_series_exhausted(std::string_view what, double partial, int n_max) {
  std::ostringstream os;
  os.precision(17);
  os << what << ": series not converged after " << n_max << " terms (partial sum " << partial
     << ")";
  throw NonConvergenceError(os.str(), partial);
}

void throw_series_overflow(std::string_view what, int n) {
  std::ostringstream os;
  os << what << ": series terms left the double range at term " << n
     << " (argument too large for direct summation)";
  throw NonConvergenceError(os.str(), std::numeric_limits<double>::quiet_NaN());
}
}  // namespace detail

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

double log_gamma(double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "log_gamma: argument must be > 0, got " << x;
    throw DomainError(os.str());
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

SignedLog signed_log_gamma(double x) {
  if (is_nonpositive_integer(x) || std::isnan(x)) {
    std::ostringstream os;
    os << "gamma: pole at " << x;
    throw PoleError(os.str());
  }
  int sign = 1;
  const double l = ::lgamma_r(x, &sign);
  return {l, sign};
}

double gamma_fn(double x) {
  if (is_nonpositive_integer(x) || std::isnan(x)) {
    std::ostringstream os;
    os << "gamma: pole at " << x;
    throw PoleError(os.str());
  }
  return std::tgamma(x);
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    std::ostringstream os;
    os << "beta: arguments must be > 0, got (" << x << ", " << y << ")";
    throw DomainError(os.str());
  }
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

double beta(double x, double y) { return std::exp(log_beta(x, y)); }

double pochhammer(double delta, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be >= 0");
  if (n == 0) return 1.0;
  if (n <= kExactProductLimit) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= delta + k;
    return p;
  }
  return log_pochhammer(delta, n).value();
}

SignedLog log_pochhammer(double delta, double q) {
  if (!(q >= 0.0)) throw DomainError("pochhammer: order must be >= 0");
  if (q == 0.0) return {0.0, 1};

  const bool integer_order = q == std::floor(q);
  if (integer_order && (q <= kExactProductLimit || delta <= 0.0)) {
    if (is_nonpositive_integer(delta) && q > -delta) {
      return {-std::numeric_limits<double>::infinity(), 0};
    }
    if (q <= kExactProductLimit || delta + q <= 0.0) {
      SignedLog r{0.0, 1};
      for (int k = 0; k < static_cast<int>(q); ++k) {
        const double f = delta + k;
        r.log_abs += std::log(std::abs(f));
        if (f < 0) r.sign = -r.sign;
      }
      return r;
    }
  }
  const SignedLog num = signed_log_gamma(delta + q);
  const SignedLog den = signed_log_gamma(delta);
  return {num.log_abs - den.log_abs, num.sign * den.sign};
}

double kummer_1f1_series(double a, double b, double x) {
  if (is_nonpositive_integer(b)) {
    throw DomainError(format_args("kummer_1f1", a, b, x) +
                      ": b must not be a non-positive integer");
  }
  double term = 1.0;
  double sum = 1.0;
  int small = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double ratio = (a + n) / (b + n) * x / (n + 1.0);
    term *= ratio;
    if (term == 0.0) return sum;
    sum += term;
    // Only count small terms past the peak, where the ratio keeps them shrinking.
    if (std::abs(ratio) < 1.0 && std::abs(term) <= kSeriesEps * std::abs(sum)) {
      if (++small >= 3) return sum;
    } else {
      small = 0;
    }
  }
  throw NonConvergenceError(format_args("kummer_1f1_series", a, b, x) + ": series not converged",
                            sum);
}

double kummer_1f1(double a, double b, double x) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(x)) {
    throw DomainError(format_args("kummer_1f1", a, b, x) + ": NaN argument");
  }
  if (is_nonpositive_integer(b)) {
    throw DomainError(format_args("kummer_1f1", a, b, x) +
                      ": b must not be a non-positive integer");
  }
  if (x == 0.0) return 1.0;
  if (a == b) return checked(std::exp(x), a, b, x);
  if (is_nonpositive_integer(a)) return checked(kummer_1f1_series(a, b, x), a, b, x);
  if (is_nonpositive_integer(b - a)) {
    if (std::isinf(x)) return x < 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return checked(std::exp(x) * kummer_1f1_series(b - a, b, -x), a, b, x);
  }

  if (x > 0.0 && x <= kRegimeSwitch) return kummer_1f1_series(a, b, x);
  if (x < 0.0 && x > -kRegimeSwitch) return std::exp(x) * kummer_1f1_series(b - a, b, -x);

  if (x < 0.0) {
    const double y = -x;
    const Asymptotic r = asymptotic_negative(a, b, y);
    if (r.accurate) return r.value;
    if (y <= kFallbackLimit) return std::exp(x) * kummer_1f1_series(b - a, b, y);
    throw AccuracyLossError(
        format_args("kummer_1f1", a, b, x) + ": asymptotic expansion lost accuracy", r.value);
  }

  const Asymptotic r = asymptotic_negative(b - a, b, x);
  if (r.accurate) return checked(std::exp(x) * r.value, a, b, x);
  if (x <= kFallbackLimit) return checked(kummer_1f1_series(a, b, x), a, b, x);
  throw AccuracyLossError(
      format_args("kummer_1f1", a, b, x) + ": asymptotic expansion lost accuracy",
      std::exp(x) * r.value);
}

double WrightSeriesSpec::convergence_margin() const {
  double m = 1.0;
  for (const auto& p : lower) m += p.scale;
  for (const auto& p : upper) m -= p.scale;
  return m;
}

void WrightSeriesSpec::validate() const {
  for (const auto& p : upper) {
    if (!(p.scale > 0.0) || !std::isfinite(p.offset)) {
      throw DomainError("wright_psi: upper pairs need finite offsets and scales > 0");
    }
  }
  for (const auto& p : lower) {
    if (!(p.scale > 0.0) || !std::isfinite(p.offset)) {
      throw DomainError("wright_psi: lower pairs need finite offsets and scales > 0");
    }
  }
  if (convergence_margin() < 0.0) {
    throw DomainError("wright_psi: convergence condition 1 + sum(B) - sum(A) >= 0 violated");
  }
}

double wright_psi(const WrightSeriesSpec& spec, double z, const SeriesControl& ctl) {
  spec.validate();
  const double log_z = z == 0.0 ? 0.0 : std::log(std::abs(z));
  auto term = [&](int n) -> double {
    if (n > 0 && z == 0.0) return 0.0;
    SignedLog acc{-log_gamma(n + 1.0) + n * log_z, (z < 0 && n % 2 == 1) ? -1 : 1};
    for (const auto& p : spec.upper) {
      const SignedLog g = signed_log_gamma(p.offset + p.scale * n);
      acc.log_abs += g.log_abs;
      acc.sign *= g.sign;
    }
    for (const auto& p : spec.lower) {
      const SignedLog g = signed_log_gamma(p.offset + p.scale * n);
      acc.log_abs -= g.log_abs;
      acc.sign *= g.sign;
    }
    return acc.value();
  };
  return sum_series(term, ctl, "wright_psi").value;
}

}  // namespace mlx
