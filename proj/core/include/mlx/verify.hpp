#pragma once

// Verification suites: every identity the library relies on, evaluated on
// seeded pseudo-random parameter tuples and reported as CheckReports.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mlx/fractional.hpp"
#include "mlx/mellin.hpp"
#include "mlx/mittag_leffler.hpp"
#include "mlx/quadrature.hpp"
#include "mlx/special.hpp"

namespace mlx {

/// Deterministic generator of in-domain parameter tuples.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);

  /// alpha, beta, gamma in [0.5, 2], c - gamma in [0.5, 2], lam, rho in
  /// [0.5, 3], p in [0.05, 1].
  ExtendedMLParams extended_params();
  /// z in [-2, 2].
  double argument();
  /// lam in [1.2, 3], s in [0.2 lam, 0.8 lam], z in [-1, 1].
  MellinPoint mellin_point();
  /// delta in [0.5, 1.5], mu - delta in [0.5, 1.5], cml = mu, z in [0.2, 1.5], p in [0, 1].
  PrabhakarImageArgs prabhakar_image_args();

 private:
  std::mt19937_64 rng_;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<double> tol;  // overrides every per-check default
  std::uint64_t seed = 7;
  QuadratureOptions quad;
  SeriesControl series;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct NamedCheck {
  std::string name;
  std::string suite;
  CheckReport report;
  std::string error;           // set when the check threw instead of reporting
  bool informational = false;  // claim checks never gate the exit status

  bool ok() const { return informational || (error.empty() && report.passed); }
};

/// "all", "reductions", "representations", "mellin", "fractional", "claims".
const std::vector<std::string>& suite_names();

/// Runs the requested suite; results are sorted by check name. Throws
/// DomainError for an unknown suite name.
std::vector<NamedCheck> run_verification(const VerifyOptions& opts);

bool required_checks_passed(const std::vector<NamedCheck>& checks);

}  // namespace mlx
