#include "mlx/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "mlx/errors.hpp"
#include "mlx/extended_beta.hpp"

namespace mlx {
namespace {

constexpr int kReductionTuples = 30;
constexpr int kRepresentationTuples = 20;
constexpr int kMellinTuples = 10;
constexpr int kExtendedGammaPoints = 20;
constexpr int kImageTuples = 10;
constexpr int kClaimTuples = 10;

constexpr double kReductionTol = 1e-9;
constexpr double kRepresentationTol = 1e-8;
constexpr double kRecurrenceTol = 1e-7;
constexpr double kMellinTol = 1e-6;
constexpr double kExtendedGammaTol = 1e-8;
constexpr double kPrefactorTol = 1e-12;
constexpr double kPowerRuleTol = 1e-9;
constexpr double kFractionalTol = 1e-6;
constexpr double kClaimTol = 1e-8;

struct Task {
  std::string name;
  std::string suite;
  bool informational;
  std::function<CheckReport()> run;
};

std::string indexed(const std::string& stem, int i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", i);
  return stem + "/" + buf;
}

class TaskList {
 public:
  TaskList(const VerifyOptions& opts) : opts_(opts) {}

  double tol(double fallback) const { return opts_.tol.value_or(fallback); }

  void add(const std::string& suite, std::string name, std::function<CheckReport()> run,
           bool informational = false) {
    tasks_.push_back({suite + "/" + std::move(name), suite, informational, std::move(run)});
  }

  std::vector<Task>& tasks() { return tasks_; }

 private:
  const VerifyOptions& opts_;
  std::vector<Task> tasks_;
};

void add_reductions(TaskList& list, ParamSampler& rng, const VerifyOptions& o) {
  const double tol = list.tol(kReductionTol);
  const auto q = o.quad;
  const auto ctl = o.series;
  const std::string s = "reductions";
  for (int i = 0; i < kReductionTuples; ++i) {
    ExtendedMLParams e = rng.extended_params();
    e.rho = e.lambda;
    const double z = rng.argument();
    list.add(s, indexed("mlx-to-oy", i), [=] {
      return CheckReport::compare(ml_ext_series(e, z, ctl, q),
                                  ml_extended_oy(e.alpha, e.beta, e.gamma, e.c, z, e.p, ctl, q),
                                  tol);
    });

    ExtendedMLParams e0 = e;
    e0.p = 0.0;
    list.add(s, indexed("mlx-to-prabhakar", i), [=] {
      return CheckReport::compare(ml_ext_series(e0, z, ctl, q),
                                  ml_prabhakar(e0.alpha, e0.beta, e0.gamma, z, ctl), tol);
    });
    list.add(s, indexed("oy-to-prabhakar", i), [=] {
      return CheckReport::compare(
          ml_extended_oy(e0.alpha, e0.beta, e0.gamma, e0.c, z, 0.0, ctl, q),
          ml_prabhakar(e0.alpha, e0.beta, e0.gamma, z, ctl), tol);
    });

    const double rho = rng.uniform(0.3, 2.5);
    const double sigma = rng.uniform(0.3, 2.5);
    const double delta = rng.uniform(-1.5, 3.0);
    list.add(s, indexed("shukla-to-prabhakar", i), [=] {
      return CheckReport::compare(ml_shukla(rho, sigma, delta, 1.0, z, ctl),
                                  ml_prabhakar(rho, sigma, delta, z, ctl), tol);
    });
    list.add(s, indexed("prabhakar-to-ml2", i), [=] {
      return CheckReport::compare(ml_prabhakar(rho, sigma, 1.0, z, ctl),
                                  ml_two_param(rho, sigma, z, ctl), tol);
    });
    list.add(s, indexed("ml2-to-ml", i), [=] {
      return CheckReport::compare(ml_two_param(rho, 1.0, z, ctl), ml_classic(rho, z, ctl), tol);
    });

    const double x = rng.uniform(0.3, 4.0);
    const double y = rng.uniform(0.3, 4.0);
    const double p = rng.uniform(0.05, 2.0);
    const double lam = rng.uniform(0.5, 3.0);
    list.add(s, indexed("extbeta-to-chaudhry", i), [=] {
      return CheckReport::compare(extended_beta({x, y, p, lam, lam}, q), chaudhry_beta(x, y, p, q),
                                  tol);
    });
    list.add(s, indexed("chaudhry-to-beta", i), [=] {
      const auto r = kernel_beta_quadrature(x, y, BetaKernel::exponential(0.0), q);
      return CheckReport::compare(require_converged(r, "chaudhry p=0"), beta(x, y), tol);
    });
  }
}

void add_representations(TaskList& list, ParamSampler& rng, const VerifyOptions& o) {
  const auto q = o.quad;
  const auto ctl = o.series;
  const std::string s = "representations";
  const double tol = list.tol(kRepresentationTol);
  const double rtol = list.tol(kRecurrenceTol);
  for (int i = 0; i < kRepresentationTuples; ++i) {
    const ExtendedMLParams e = rng.extended_params();
    const double z = rng.argument();
    list.add(s, indexed("integral", i), [=] {
      return CheckReport::compare(ml_ext_integral(e, z, q, ctl), ml_ext_series(e, z, ctl, q), tol);
    });
    list.add(s, indexed("semi-infinite", i), [=] {
      return CheckReport::compare(ml_ext_integral_semiinf(e, z, q, ctl),
                                  ml_ext_series(e, z, ctl, q), tol);
    });
    list.add(s, indexed("trig", i), [=] {
      return CheckReport::compare(ml_ext_integral_trig(e, z, q, ctl), ml_ext_series(e, z, ctl, q),
                                  tol);
    });
    list.add(s, indexed("recurrence", i), [=] { return check_recurrence(e, z, rtol, ctl, q); });
    list.add(s, indexed("first-derivative", i),
             [=] { return check_first_derivative(e, z, tol, ctl, q); });

    ExtendedMLParams ep = e;
    ep.beta = 1.0 + rng.uniform(0.2, 2.0);
    const double mu = rng.uniform(-1.0, 1.0);
    const double zp = rng.uniform(0.2, 1.5);
    list.add(s, indexed("power-derivative", i),
             [=] { return check_power_derivative(ep, mu, zp, 1, tol, ctl, q); });
  }
}

void add_mellin(TaskList& list, ParamSampler& rng, const VerifyOptions& o) {
  const auto q = o.quad;
  const auto ctl = o.series;
  const std::string s = "mellin";
  const double tol = list.tol(kMellinTol);
  for (int i = 0; i < kMellinTuples; ++i) {
    const MellinPoint pt = rng.mellin_point();
    list.add(s, indexed("transform", i), [=] {
      CheckReport r = check_mellin(pt, tol, ctl, q);
      return r;
    });
  }
  const double gtol = list.tol(kExtendedGammaTol);
  for (int i = 0; i < kExtendedGammaPoints; ++i) {
    const double lam = rng.uniform(0.8, 4.0);
    const double rho = rng.uniform(0.5, 4.0);
    const double sv = lam * rng.uniform(0.2, 0.8);
    list.add(s, indexed("extended-gamma", i), [=] {
      return CheckReport::compare(extended_gamma(sv, lam, rho, q),
                                  extended_gamma_closed_form(sv, lam, rho), gtol);
    });
  }
  const double ctol = list.tol(kPrefactorTol);
  for (int i = 0; i < kMellinTuples; ++i) {
    MellinPoint pt = rng.mellin_point();
    pt.s = 1.0;
    pt.params.lambda = rng.uniform(1.2, 4.0);
    pt.params.rho = rng.uniform(1.2, 4.0);
    list.add(s, indexed("prefactor-s1", i), [=] {
      const auto& e = pt.params;
      const double expected =
          std::tgamma(e.rho) * std::tgamma(e.lambda - 1.0) * std::tgamma(e.c + 1.0 - e.gamma) /
          (std::tgamma(e.lambda) * std::tgamma(e.rho - 1.0) * std::tgamma(e.gamma) *
           std::tgamma(e.c - e.gamma));
      return CheckReport::compare(mellin_prefactor(pt), expected, ctol);
    });
  }
}

void add_fractional(TaskList& list, ParamSampler& rng, const VerifyOptions& o) {
  const auto q = o.quad;
  const auto ctl = o.series;
  const std::string s = "fractional";
  const double ptol = list.tol(kPowerRuleTol);
  for (double a : {0.0, 0.5, 1.0, 2.0}) {
    for (double nu : {0.25, 0.5, 1.0}) {
      char name[48];
      std::snprintf(name, sizeof name, "power-rule/a=%.2f,nu=%.2f", a, nu);
      const double x = 1.3;
      list.add(s, name, [=] {
        const double lhs = rl_derivative([a](double t) { return std::pow(t, a); }, x, -nu, q);
        const double rhs = std::exp(std::lgamma(a + 1.0) - std::lgamma(a + nu + 1.0)) *
                           std::pow(x, a + nu);
        return CheckReport::compare(lhs, rhs, ptol);
      });
    }
  }
  const double rtol = list.tol(kReductionTol);
  for (int i = 0; i < kImageTuples; ++i) {
    const double x = rng.uniform(0.3, 2.0);
    const double mu = -rng.uniform(0.2, 2.0);
    const double p = rng.uniform(0.05, 1.0);
    const double lam = rng.uniform(0.5, 3.0);
    const double rho = rng.uniform(0.5, 3.0);
    const double a = rng.uniform(0.0, 2.0);
    auto f = [a](double t) { return std::pow(t, a) * std::exp(-t); };
    list.add(s, indexed("reduction-extended", i), [=] {
      return CheckReport::compare(rl_further_extended(f, x, {mu, p, lam, lam}, q),
                                  rl_extended(f, x, mu, p, q), rtol);
    });
    list.add(s, indexed("reduction-classical", i), [=] {
      return CheckReport::compare(rl_further_extended(f, x, {mu, 0.0, lam, rho}, q),
                                  rl_derivative(f, x, mu, q), rtol);
    });
  }
  const double ttol = list.tol(kFractionalTol);
  for (int i = 0; i < kImageTuples; ++i) {
    const PrabhakarImageArgs args = rng.prabhakar_image_args();
    list.add(s, indexed("prabhakar-image", i), [=] { return check_theorem_3_1(args, ttol, q, ctl); });
  }
}

void add_claims(TaskList& list, ParamSampler& rng, const VerifyOptions& o) {
  const auto q = o.quad;
  const auto ctl = o.series;
  const std::string s = "claims";
  const double tol = list.tol(kClaimTol);
  for (int i = 0; i < kClaimTuples; ++i) {
    const ExtendedMLParams e = rng.extended_params();
    const double z = rng.argument();
    const int n = 1 + i % 2;
    list.add(
        s, indexed("shifted-derivative", i), [=] { return claim_check_theorem_3_2(e, z, n, tol, ctl, q); },
        true);
  }
  for (int i = 0; i < kClaimTuples; ++i) {
    ExtendedMLParams e = rng.extended_params();
    e.beta = 1.0 + rng.uniform(0.2, 2.0);
    const double mu = rng.uniform(-1.0, 1.0);
    const double z = rng.uniform(0.2, 1.5);
    list.add(
        s, indexed("shifted-power-derivative", i),
        [=] { return claim_check_theorem_3_3(e, mu, z, 1, tol, ctl, q); }, true);
  }
}

void run_tasks(std::vector<Task>& tasks, std::vector<NamedCheck>& out, unsigned threads) {
  out.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      NamedCheck& c = out[i];
      c.name = tasks[i].name;
      c.suite = tasks[i].suite;
      c.informational = tasks[i].informational;
      try {
        c.report = tasks[i].run();
      } catch (const std::exception& ex) {
        c.error = ex.what();
        c.report.passed = false;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace

double ParamSampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ExtendedMLParams ParamSampler::extended_params() {
  ExtendedMLParams e;
  e.alpha = uniform(0.5, 2.0);
  e.beta = uniform(0.5, 2.0);
  e.gamma = uniform(0.5, 2.0);
  e.c = e.gamma + uniform(0.5, 2.0);
  e.lambda = uniform(0.5, 3.0);
  e.rho = uniform(0.5, 3.0);
  e.p = uniform(0.05, 1.0);
  return e;
}

double ParamSampler::argument() { return uniform(-2.0, 2.0); }

MellinPoint ParamSampler::mellin_point() {
  MellinPoint pt;
  pt.params = extended_params();
  pt.params.lambda = uniform(1.2, 3.0);
  pt.s = pt.params.lambda * uniform(0.2, 0.8);
  pt.z = uniform(-1.0, 1.0);
  return pt;
}

PrabhakarImageArgs ParamSampler::prabhakar_image_args() {
  PrabhakarImageArgs a;
  a.delta = uniform(0.5, 1.5);
  a.mu = a.delta + uniform(0.5, 1.5);
  a.cml = a.mu;
  a.alpha = uniform(0.5, 1.5);
  a.beta = uniform(0.5, 2.0);
  a.z = uniform(0.2, 1.5);
  a.p = uniform(0.0, 1.0);
  a.lambda = uniform(0.5, 3.0);
  a.rho = uniform(0.5, 3.0);
  return a;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",    "reductions", "representations",
                                              "mellin", "fractional", "claims"};
  return names;
}

std::vector<NamedCheck> run_verification(const VerifyOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opts.suite) == names.end()) {
    throw DomainError("verify: unknown suite '" + opts.suite + "'");
  }
  opts.quad.validate();
  opts.series.validate();

  // Each suite draws from its own stream so that running one suite alone
  // reproduces the same tuples as running it inside "all".
  using Adder = void (*)(TaskList&, ParamSampler&, const VerifyOptions&);
  const std::array<std::pair<const char*, Adder>, 5> suites{{
      {"reductions", add_reductions},
      {"representations", add_representations},
      {"mellin", add_mellin},
      {"fractional", add_fractional},
      {"claims", add_claims},
  }};

  TaskList list(opts);
  std::uint64_t stream = 0;
  for (const auto& [name, adder] : suites) {
    ++stream;
    if (opts.suite != "all" && opts.suite != name) continue;
    ParamSampler rng(opts.seed * 1000003ULL + stream);
    adder(list, rng, opts);
  }

  std::vector<NamedCheck> out;
  run_tasks(list.tasks(), out, opts.threads);
  std::sort(out.begin(), out.end(),
            [](const NamedCheck& a, const NamedCheck& b) { return a.name < b.name; });
  return out;
}

bool required_checks_passed(const std::vector<NamedCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok(); });
}

}  // namespace mlx
