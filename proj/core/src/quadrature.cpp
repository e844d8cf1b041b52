#include "mlx/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mlx/errors.hpp"

namespace mlx {
namespace {

constexpr int kMaxLevel = 16;
constexpr int kMinLevel = 3;
constexpr double kHalfPi = std::numbers::pi / 2.0;

// Contributions below these fractions of the running L1 norm are dropped.
constexpr double kCutFraction = 1e-18;
constexpr double kSignificantFraction = 1e-12;
constexpr double kNegligibleWeight = 1e-250;

// Abscissae t = k h with h = 2^-level; level 0 holds every k >= 1, finer levels
// only the odd k so each level adds exactly the new nodes.
template <class Node, class Make, class Keep>
std::vector<Node> build_level(int level, Make make, Keep keep) {
  std::vector<Node> nodes;
  const double h = std::ldexp(1.0, -level);
  const int stride = level == 0 ? 1 : 2;
  for (long k = 1;; k += stride) {
    const Node n = make(static_cast<double>(k) * h);
    if (!keep(n)) break;
    nodes.push_back(n);
  }
  return nodes;
}

template <class Node>
class LazyTable {
 public:
  template <class Builder>
  std::span<const Node> level(int l, Builder build) const {
    std::call_once(flags_[l], [&] { levels_[l] = build(l); });
    return levels_[l];
  }

 private:
  mutable std::array<std::once_flag, kMaxLevel + 1> flags_;
  mutable std::array<std::vector<Node>, kMaxLevel + 1> levels_;
};

// tanh-sinh on [-1, 1]: u = tanh(pi/2 sinh t); complement uc = 1 - u.
struct TanhSinhNode {
  double t;
  double uc;
  double w;
};

TanhSinhNode make_tanh_sinh(double t) {
  const double v = kHalfPi * std::sinh(t);
  const double ev = std::exp(-v);
  const double sech = 2.0 * ev / (1.0 + ev * ev);
  return {t, ev * sech, kHalfPi * std::cosh(t) * sech * sech};
}

std::span<const TanhSinhNode> tanh_sinh_level(int l) {
  static const LazyTable<TanhSinhNode> table;
  return table.level(l, [](int level) {
    return build_level<TanhSinhNode>(level, make_tanh_sinh, [](const TanhSinhNode& n) {
      return n.uc >= 4.0 * DBL_MIN && n.w > 0.0;
    });
  });
}

// exp-sinh on (0, inf): x = exp(pi/2 sinh t), stored for +t and -t.
struct ExpSinhNode {
  double t;
  double x_pos;
  double w_pos;
  double x_neg;
  double w_neg;
};

ExpSinhNode make_exp_sinh(double t) {
  const double v = kHalfPi * std::sinh(t);
  const double ch = kHalfPi * std::cosh(t);
  const double xp = std::exp(v);
  const double xn = std::exp(-v);
  return {t, xp, ch * xp, xn, ch * xn};
}

std::span<const ExpSinhNode> exp_sinh_level(int l) {
  static const LazyTable<ExpSinhNode> table;
  return table.level(l, [](int level) {
    return build_level<ExpSinhNode>(level, make_exp_sinh, [](const ExpSinhNode& n) {
      return n.x_neg >= 4.0 * DBL_MIN && std::isfinite(n.w_pos) && n.x_pos < 1e300;
    });
  });
}

struct Sample {
  double x;
  double left;
  double right;
  double weight;
};

// Sampling of the tanh-sinh rule mapped onto (a, b).
struct FiniteRule {
  double a;
  double b;
  double half;

  static std::span<const TanhSinhNode> level(int l) { return tanh_sinh_level(l); }

  Sample centre() const { return {a + half, half, half, half * kHalfPi}; }

  Sample at(const TanhSinhNode& n, int side) const {
    const double near = half * n.uc;
    const double far = half * (2.0 - n.uc);
    if (side > 0) return {b - near, far, near, half * n.w};
    return {a + near, near, far, half * n.w};
  }

  bool negligible(const Sample& s) const {
    return s.left == 0.0 || s.right == 0.0 || s.x <= a || s.x >= b ||
           s.weight < kNegligibleWeight;
  }
};

struct SemiInfiniteRule {
  double a;

  static std::span<const ExpSinhNode> level(int l) { return exp_sinh_level(l); }

  Sample centre() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {a + 1.0, 1.0, inf, kHalfPi};
  }

  Sample at(const ExpSinhNode& n, int side) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (side > 0) return {a + n.x_pos, n.x_pos, inf, n.w_pos};
    return {a + n.x_neg, n.x_neg, inf, n.w_neg};
  }

  bool negligible(const Sample& s) const {
    return s.left == 0.0 || s.x <= a || !std::isfinite(s.x) ||
           s.weight < kNegligibleWeight;
  }
};

std::string describe_failure(double x, double value) {
  std::ostringstream os;
  os.precision(17);
  os << "quadrature: integrand returned " << value << " at x = " << x;
  return os.str();
}

// Runs the refinement loop for `width` integrands sharing every node.
// `f(sample, out)` fills out[0..width).
template <class Rule, class F>
BatchQuadratureResult run_de(const Rule& rule, const F& f, std::size_t width,
                             const QuadratureOptions& opts) {
  opts.validate();
  const int max_level = std::min(opts.max_level, kMaxLevel);
  const int min_level = std::min(kMinLevel, max_level);

  BatchQuadratureResult res;
  res.values.assign(width, 0.0);
  res.error_estimates.assign(width, 0.0);
  std::vector<double> l1(width, 0.0);
  std::vector<double> buf(width, 0.0);
  std::vector<double> fresh(width, 0.0);

  constexpr double inf = std::numeric_limits<double>::infinity();
  // Per side (0: towards the left endpoint, 1: towards the right / infinity).
  std::array<double, 2> cut_t{inf, inf};
  std::array<double, 2> significant_t{0.0, 0.0};

  auto evaluate = [&](const Sample& s) {
    ++res.evaluations;
    f(s, std::span<double>(buf));
    return std::all_of(buf.begin(), buf.end(), [](double v) { return std::isfinite(v); });
  };
  auto first_bad = [&] {
    return *std::find_if(buf.begin(), buf.end(), [](double v) { return !std::isfinite(v); });
  };
  auto below = [&](std::span<const double> terms, double fraction) {
    for (std::size_t i = 0; i < width; ++i) {
      if (std::abs(terms[i]) > fraction * l1[i]) return false;
    }
    return true;
  };

  std::vector<double> sum(width, 0.0);
  std::vector<double> term(width, 0.0);
  std::vector<double> prev_term(width, inf);
  {
    const Sample c = rule.centre();
    if (!evaluate(c)) {
      const double bad = first_bad();
      throw EvaluationError(describe_failure(c.x, bad), c.x);
    }
    for (std::size_t i = 0; i < width; ++i) {
      sum[i] += c.weight * buf[i];
      l1[i] += std::abs(c.weight * buf[i]);
    }
  }
  for (int side = 0; side < 2; ++side) {
    const int dir = side == 0 ? -1 : 1;
    std::fill(prev_term.begin(), prev_term.end(), inf);
    for (const auto& node : Rule::level(0)) {
      const Sample s = rule.at(node, dir);
      if (!evaluate(s)) {
        if (rule.negligible(s) || below(prev_term, kSignificantFraction)) {
          cut_t[side] = node.t - 1.0;
          break;
        }
        const double bad = first_bad();
        throw EvaluationError(describe_failure(s.x, bad), s.x);
      }
      for (std::size_t i = 0; i < width; ++i) {
        term[i] = s.weight * buf[i];
        sum[i] += term[i];
        l1[i] += std::abs(term[i]);
      }
      if (!below(term, kSignificantFraction)) significant_t[side] = node.t;
      if (node.t >= 2.0 && below(term, kCutFraction) && below(prev_term, kCutFraction)) {
        cut_t[side] = node.t;
        break;
      }
      prev_term = term;
    }
  }

  std::vector<double> estimate = sum;
  res.values = estimate;
  for (std::size_t i = 0; i < width; ++i) res.error_estimates[i] = std::abs(estimate[i]);

  for (int level = 1; level <= max_level; ++level) {
    const auto nodes = Rule::level(level);
    std::size_t planned = 0;
    for (int side = 0; side < 2; ++side) {
      planned += static_cast<std::size_t>(
          std::count_if(nodes.begin(), nodes.end(),
                        [&](const auto& n) { return n.t <= cut_t[side]; }));
    }
    if (res.evaluations + planned > opts.max_evals) break;

    std::fill(fresh.begin(), fresh.end(), 0.0);
    for (int side = 0; side < 2; ++side) {
      const int dir = side == 0 ? -1 : 1;
      for (const auto& node : nodes) {
        if (node.t > cut_t[side]) break;
        const Sample s = rule.at(node, dir);
        if (!evaluate(s)) {
          if (rule.negligible(s) || node.t > significant_t[side]) continue;
          const double bad = first_bad();
          throw EvaluationError(describe_failure(s.x, bad), s.x);
        }
        for (std::size_t i = 0; i < width; ++i) {
          fresh[i] += s.weight * buf[i];
          l1[i] += std::abs(s.weight * buf[i]);
        }
      }
    }
    const double h = std::ldexp(1.0, -level);
    bool all_ok = level >= min_level;
    for (std::size_t i = 0; i < width; ++i) {
      const double refined = 0.5 * estimate[i] + h * fresh[i];
      res.error_estimates[i] = std::abs(refined - estimate[i]);
      res.values[i] = refined;
      estimate[i] = refined;
      all_ok = all_ok && res.error_estimates[i] <=
                             std::max(opts.rel_tol * std::abs(refined), opts.abs_tol);
    }
    if (all_ok) {
      res.converged = true;
      break;
    }
  }
  return res;
}

QuadratureResult single(const BatchQuadratureResult& r) {
  return {r.values.front(), r.error_estimates.front(), r.evaluations, r.converged};
}

}  // namespace

void QuadratureOptions::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureOptions: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("QuadratureOptions: abs_tol must be >= 0");
  if (max_level < 1) throw DomainError("QuadratureOptions: max_level must be >= 1");
  if (max_evals < 16) throw DomainError("QuadratureOptions: max_evals must be >= 16");
}

QuadratureResult integrate_finite(const GapIntegrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite: requires finite a < b");
  }
  const FiniteRule rule{a, b, 0.5 * (b - a)};
  return single(run_de(
      rule, [&](const Sample& s, std::span<double> out) { out[0] = f(s.x, s.left, s.right); },
      1, opts));
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite: requires finite a < b");
  }
  const FiniteRule rule{a, b, 0.5 * (b - a)};
  return single(run_de(
      rule, [&](const Sample& s, std::span<double> out) { out[0] = f(s.x); }, 1, opts));
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double a,
                                         const QuadratureOptions& opts) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  const SemiInfiniteRule rule{a};
  return single(run_de(
      rule, [&](const Sample& s, std::span<double> out) { out[0] = f(s.x); }, 1, opts));
}

QuadratureResult integrate_semi_infinite(const GapIntegrand& f, double a,
                                         const QuadratureOptions& opts) {
  if (!std::isfinite(a)) throw DomainError("integrate_semi_infinite: a must be finite");
  const SemiInfiniteRule rule{a};
  return single(run_de(
      rule, [&](const Sample& s, std::span<double> out) { out[0] = f(s.x, s.left, s.right); },
      1, opts));
}

BatchQuadratureResult integrate_finite_batch(const BatchIntegrand& f, std::size_t width,
                                             double a, double b,
                                             const QuadratureOptions& opts) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_finite_batch: requires finite a < b");
  }
  if (width == 0) throw DomainError("integrate_finite_batch: width must be >= 1");
  const FiniteRule rule{a, b, 0.5 * (b - a)};
  return run_de(
      rule, [&](const Sample& s, std::span<double> out) { f(s.x, s.left, s.right, out); },
      width, opts);
}

double require_converged(const QuadratureResult& r, std::string_view what) {
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << what << ": quadrature did not converge (estimate " << r.value
       << ", error estimate " << r.error_estimate << ", " << r.evaluations
       << " evaluations)";
    throw NonConvergenceError(os.str(), r.value);
  }
  return r.value;
}

}  // namespace mlx
