#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlx/errors.hpp"
#include "mlx/extended_beta.hpp"
#include "mlx/fractional.hpp"
#include "mlx/mittag_leffler.hpp"
#include "mlx/verify.hpp"

namespace mlx::cli {
namespace {

using Inputs = std::vector<std::pair<std::string, double>>;

// Wraps a lookup so the evaluators read like the formulas.
class Args {
 public:
  explicit Args(const Inputs& in) : in_(in) {}
  double operator[](const char* name) const {
    for (const auto& [k, v] : in_) {
      if (k == name) return v;
    }
    throw std::logic_error(std::string("missing input ") + name);
  }

 private:
  const Inputs& in_;
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> inputs;
  std::string grid;
  std::function<double(const Args&, const Settings&)> eval;
};

const std::vector<FunctionDef>& registry() {
  static const std::vector<FunctionDef> defs{
      {"ml", {"rho", "z"}, "z",
       [](const Args& a, const Settings& s) { return ml_classic(a["rho"], a["z"], s.series); }},
      {"ml2", {"rho", "sigma", "z"}, "z",
       [](const Args& a, const Settings& s) {
         return ml_two_param(a["rho"], a["sigma"], a["z"], s.series);
       }},
      {"prabhakar", {"rho", "sigma", "delta", "z"}, "z",
       [](const Args& a, const Settings& s) {
         return ml_prabhakar(a["rho"], a["sigma"], a["delta"], a["z"], s.series);
       }},
      {"shukla", {"rho", "sigma", "delta", "q", "z"}, "z",
       [](const Args& a, const Settings& s) {
         return ml_shukla(a["rho"], a["sigma"], a["delta"], a["q"], a["z"], s.series);
       }},
      {"oy", {"rho", "sigma", "delta", "c", "p", "z"}, "z",
       [](const Args& a, const Settings& s) {
         return ml_extended_oy(a["rho"], a["sigma"], a["delta"], a["c"], a["z"], a["p"],
                               s.series, s.quad);
       }},
      {"mlx", {"alpha", "beta", "gamma", "c", "lam", "rho", "p", "z"}, "z",
       [](const Args& a, const Settings& s) {
         const ExtendedMLParams e{a["alpha"], a["beta"], a["gamma"], a["c"],
                                  a["lam"],   a["rho"],  a["p"]};
         return ml_ext_series(e, a["z"], s.series, s.quad);
       }},
      {"beta-ext", {"x", "y", "p", "lam", "rho"}, "p",
       [](const Args& a, const Settings& s) {
         return extended_beta({a["x"], a["y"], a["p"], a["lam"], a["rho"]}, s.quad);
       }},
      {"gamma-ext", {"s", "lam", "rho"}, "s",
       [](const Args& a, const Settings& s) {
         return extended_gamma(a["s"], a["lam"], a["rho"], s.quad);
       }},
      // The fractional image of t^(delta-1) E^cml_{alpha,beta}(t).
      {"frac", {"delta", "mu", "alpha", "beta", "cml", "p", "lam", "rho", "z"}, "z",
       [](const Args& a, const Settings& s) {
         const PrabhakarImageArgs t{a["delta"], a["mu"], a["alpha"], a["beta"], a["cml"],
                               a["z"],     a["p"],  a["lam"],   a["rho"]};
         return prabhakar_image_lhs(t, s.quad, s.series);
       }},
  };
  return defs;
}

const FunctionDef& lookup(const std::string& fn) {
  for (const auto& d : registry()) {
    if (d.name == fn) return d;
  }
  throw DomainError("unknown function '" + fn + "'");
}

const std::vector<std::string>& all_flags() {
  static const std::vector<std::string> flags = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) {
      for (const auto& n : d.inputs) {
        if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
      }
    }
    return v;
  }();
  return flags;
}

Settings tightened(const Settings& s) {
  Settings t = s;
  t.quad.rel_tol = std::min(s.quad.rel_tol, std::max(s.quad.rel_tol * 1e-2, 1e-14));
  t.quad.abs_tol = s.quad.abs_tol * 1e-2;
  t.quad.max_level = std::min(s.quad.max_level + 2, 16);
  t.series.rel_tol = s.series.rel_tol * 1e-2;
  t.series.consecutive_small = s.series.consecutive_small + 2;
  return t;
}

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(*first))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(last[-1]))) --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument(what + ": '" + text + "' is not a number");
  }
  return v;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flag values shared by eval and table.
struct ParamFlags {
  std::map<std::string, double> values;
  std::map<std::string, CLI::Option*> options;

  void attach(CLI::App& app) {
    for (const auto& name : all_flags()) {
      options[name] = app.add_option("--" + name, values[name], "parameter " + name);
    }
  }

  bool given(const std::string& name) const { return options.at(name)->count() > 0; }

  // Collects the inputs of `def`, leaving `skip` for the caller to fill.
  Inputs collect(const FunctionDef& def, const std::string& skip, const std::string& cmd) const {
    for (const auto& name : all_flags()) {
      const bool used = std::find(def.inputs.begin(), def.inputs.end(), name) != def.inputs.end();
      if (given(name) && !used) {
        throw UsageError(cmd + " " + def.name + ": --" + name + " is not a parameter of " +
                         def.name);
      }
      if (given(name) && name == skip) {
        throw UsageError(cmd + " " + def.name + ": --" + name + " is the grid variable");
      }
    }
    Inputs in;
    for (const auto& name : def.inputs) {
      if (name == skip) {
        in.emplace_back(name, 0.0);
        continue;
      }
      double v;
      if (given(name)) {
        v = values.at(name);
      } else if (name == "cml" && given("mu")) {
        v = values.at("mu");
      } else {
        throw UsageError(cmd + " " + def.name + ": missing --" + name);
      }
      if (!std::isfinite(v)) {
        throw DomainError(cmd + " " + def.name + ": --" + name + " must be finite");
      }
      in.emplace_back(name, v);
    }
    return in;
  }
};

std::string check_line(const NamedCheck& c) {
  const auto& r = c.report;
  const char* status;
  if (!c.error.empty()) {
    status = c.informational ? "INFO-ERROR" : "ERROR";
  } else if (c.informational) {
    status = r.passed ? "INFO-HOLDS" : "INFO-GAP";
  } else {
    status = r.passed ? "PASS" : "FAIL";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %-44s rel_gap=%.3e tol=%.1e", status, c.name.c_str(),
                r.rel_gap, r.tol);
  std::string line = buf;
  if (!c.error.empty()) line += "  error: " + c.error;
  if (!r.note.empty()) line += "  [" + r.note + "]";
  return line;
}

nlohmann::ordered_json check_json(const NamedCheck& c) {
  const auto& r = c.report;
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["suite"] = c.suite;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["abs_gap"] = r.abs_gap;
  j["rel_gap"] = r.rel_gap;
  j["tol"] = r.tol;
  j["passed"] = c.error.empty() && r.passed;
  j["informational"] = c.informational;
  j["note"] = r.note;
  j["error"] = c.error;
  return j;
}

void write_records(std::ostream& os, const std::vector<OutputRecord>& records,
                   const std::string& format) {
  if (format == "json") {
    os << to_json(records) << '\n';
    return;
  }
  if (!records.empty()) os << csv_header(records.front()) << '\n';
  for (const auto& r : records) os << csv_row(r) << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_header(const OutputRecord& rec) {
  std::string h = "function";
  for (const auto& [k, v] : rec.inputs) h += "," + k;
  return h + ",value,error_estimate,converged";
}

std::string csv_row(const OutputRecord& rec) {
  std::string row = rec.function;
  for (const auto& [k, v] : rec.inputs) row += "," + format_double(v);
  row += "," + format_double(rec.value);
  row += "," + format_double(rec.error_estimate);
  row += rec.converged ? ",true" : ",false";
  return row;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["function"] = r.function;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    j["inputs"] = in;
    j["value"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["converged"] = r.converged;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& function_inputs(const std::string& fn) {
  return lookup(fn).inputs;
}

const std::string& grid_variable(const std::string& fn) { return lookup(fn).grid; }

OutputRecord evaluate(const std::string& fn, const Inputs& inputs, const Settings& settings) {
  const FunctionDef& def = lookup(fn);
  const Args args(inputs);
  OutputRecord rec{fn, inputs, 0.0, 0.0, true};
  rec.value = def.eval(args, settings);
  try {
    rec.error_estimate = std::abs(rec.value - def.eval(args, tightened(settings)));
  } catch (const NonConvergenceError&) {
    // The requested tolerance was met but a tighter one is out of reach.
    rec.error_estimate = std::abs(rec.value);
    rec.converged = false;
  }
  return rec;
}

void apply_config(std::istream& in, Settings& settings, const std::string& source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw UsageError(where + ": expected key=value");
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    const double v = parse_number(line.substr(eq + 1), where + " " + key);
    if (key == "rel_tol") {
      settings.quad.rel_tol = v;
    } else if (key == "abs_tol") {
      settings.quad.abs_tol = v;
    } else if (key == "max_level") {
      settings.quad.max_level = static_cast<int>(v);
    } else if (key == "max_evals") {
      settings.quad.max_evals = static_cast<std::size_t>(v);
    } else if (key == "series_rel_tol") {
      settings.series.rel_tol = v;
    } else if (key == "series_max_terms") {
      settings.series.n_max = static_cast<int>(v);
    } else {
      throw UsageError(where + ": unknown key '" + key + "'");
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended Mittag-Leffler functions: evaluate, tabulate, verify", "mlx"};
  app.require_subcommand(1);

  std::string config_path;
  double rel_tol_flag = 0.0;
  app.add_option("--config", config_path, "key=value file with quadrature/series defaults");
  auto* rel_tol_opt = app.add_option("--rel-tol", rel_tol_flag, "quadrature relative tolerance");

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  std::string eval_fn;
  std::string eval_format = "csv";
  eval->add_option("function", eval_fn, "function name")
      ->required()
      ->check(CLI::IsMember(function_names()));
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"csv", "json"}));
  ParamFlags eval_flags;
  eval_flags.attach(*eval);

  auto* table = app.add_subcommand("table", "tabulate a function on an even grid");
  std::string table_fn;
  std::string table_format = "csv";
  std::string table_out;
  double start = 0.0;
  double end = 0.0;
  int steps = 0;
  table->add_option("function", table_fn, "function name")
      ->required()
      ->check(CLI::IsMember(function_names()));
  table->add_option("--z-start", start, "first grid value")->required();
  table->add_option("--z-end", end, "last grid value")->required();
  table->add_option("--steps", steps, "number of grid points (>= 2)")->required();
  table->add_option("--out", table_out, "output file (default: standard output)");
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  ParamFlags table_flags;
  table_flags.attach(*table);

  auto* verify = app.add_subcommand("verify", "run the numerical verification suites");
  VerifyOptions vopts;
  double vtol = 0.0;
  std::string report = "text";
  verify->add_option("--suite", vopts.suite)->check(CLI::IsMember(suite_names()));
  auto* vtol_opt = verify->add_option("--tol", vtol, "override every check tolerance");
  verify->add_option("--seed", vopts.seed);
  verify->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--threads", vopts.threads, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Settings settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw IoError("cannot read config file '" + config_path + "'");
      apply_config(in, settings, config_path);
    }
    if (const char* env = std::getenv("MLX_TOL"); env != nullptr && *env != '\0') {
      settings.quad.rel_tol = parse_number(env, "MLX_TOL");
    }
    if (rel_tol_opt->count() > 0) settings.quad.rel_tol = rel_tol_flag;
    settings.quad.validate();
    settings.series.validate();

    if (*eval) {
      const FunctionDef& def = lookup(eval_fn);
      const Inputs in = eval_flags.collect(def, "", "eval");
      write_records(out, {evaluate(eval_fn, in, settings)}, eval_format);
      return kOk;
    }

    if (*table) {
      const FunctionDef& def = lookup(table_fn);
      if (steps < 2) throw UsageError("table: --steps must be >= 2");
      if (!std::isfinite(start) || !std::isfinite(end) || !(start < end)) {
        throw UsageError("table: requires finite --z-start < --z-end");
      }
      Inputs in = table_flags.collect(def, def.grid, "table");
      std::vector<OutputRecord> records;
      for (int i = 0; i < steps; ++i) {
        const double g = i == steps - 1 ? end : start + (end - start) * i / (steps - 1);
        for (auto& [k, v] : in) {
          if (k == def.grid) v = g;
        }
        records.push_back(evaluate(table_fn, in, settings));
      }
      if (table_out.empty()) {
        write_records(out, records, table_format);
        return kOk;
      }
      std::ofstream file(table_out, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open '" + table_out + "' for writing");
      write_records(file, records, table_format);
      file.flush();
      if (!file) throw IoError("write to '" + table_out + "' failed");
      return kOk;
    }

    vopts.quad = settings.quad;
    vopts.series = settings.series;
    if (vtol_opt->count() > 0) {
      if (!(vtol > 0.0)) throw DomainError("verify: --tol must be > 0");
      vopts.tol = vtol;
    }
    const auto checks = run_verification(vopts);
    int passed = 0;
    int failed = 0;
    int errors = 0;
    int informational = 0;
    for (const auto& c : checks) {
      if (c.informational) {
        ++informational;
      } else if (!c.error.empty()) {
        ++errors;
      } else if (c.report.passed) {
        ++passed;
      } else {
        ++failed;
      }
    }
    const bool ok = required_checks_passed(checks);
    if (report == "json") {
      nlohmann::ordered_json j;
      j["suite"] = vopts.suite;
      j["seed"] = vopts.seed;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : checks) arr.push_back(check_json(c));
      j["checks"] = std::move(arr);
      j["summary"] = {{"total", checks.size()}, {"passed", passed},
                      {"failed", failed},       {"errors", errors},
                      {"informational", informational}, {"ok", ok}};
      out << j.dump(2) << '\n';
    } else {
      for (const auto& c : checks) out << check_line(c) << '\n';
      out << "summary: " << checks.size() << " checks, " << passed << " passed, " << failed
          << " failed, " << errors << " errors, " << informational << " informational\n";
    }
    return ok ? kOk : kVerifyFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NonConvergenceError& e) {
    err << "no convergence: " << e.what() << '\n';
    return kNumerical;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace mlx::cli
