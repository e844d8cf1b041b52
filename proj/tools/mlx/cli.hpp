#pragma once

// The mlx command-line surface, kept in a library so tests can drive it
// without spawning processes.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mlx/quadrature.hpp"
#include "mlx/special.hpp"

namespace mlx::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNumerical = 3,  // non-convergence or a non-finite integrand value
  kIo = 4,
  kVerifyFailed = 5,
};

struct Settings {
  QuadratureOptions quad;
  SeriesControl series;
};

struct OutputRecord {
  std::string function;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

std::string csv_header(const OutputRecord& rec);
std::string csv_row(const OutputRecord& rec);
std::string to_json(const std::vector<OutputRecord>& records);

/// Names accepted by `eval` and `table`.
const std::vector<std::string>& function_names();

/// Input names of a function, in output order.
const std::vector<std::string>& function_inputs(const std::string& fn);

/// Variable swept by `table` (z, or p for beta-ext, s for gamma-ext).
const std::string& grid_variable(const std::string& fn);

/// Evaluates `fn` at the given inputs. error_estimate is the change in value
/// when the computation is repeated at tighter tolerances.
OutputRecord evaluate(const std::string& fn, const std::vector<std::pair<std::string, double>>& inputs,
                      const Settings& settings);

/// Applies key=value lines (rel_tol, abs_tol, max_level, max_evals,
/// series_rel_tol, series_max_terms). '#' starts a comment.
void apply_config(std::istream& in, Settings& settings, const std::string& source);

/// Full program: parses argv, writes results to `out` and diagnostics to
/// `err`, returns the process exit code. MLX_TOL is read from the environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mlx::cli
