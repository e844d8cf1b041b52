#include <doctest.h>

#include <algorithm>
#include <set>

#include "mlx/errors.hpp"
#include "mlx/verify.hpp"

using namespace mlx;

TEST_CASE("sampler is deterministic and stays in range") {
  ParamSampler a(11);
  ParamSampler b(11);
  for (int i = 0; i < 200; ++i) {
    const ExtendedMLParams x = a.extended_params();
    const ExtendedMLParams y = b.extended_params();
    CHECK(x.alpha == y.alpha);
    CHECK(x.p == y.p);
    CHECK(x.c - x.gamma >= 0.5);
    CHECK(x.p >= 0.05);
    x.validate();
    const MellinPoint m = a.mellin_point();
    b.mellin_point();
    CHECK(m.s > 0.0);
    CHECK(m.s < m.params.lambda);
    const PrabhakarImageArgs t = a.prabhakar_image_args();
    b.prabhakar_image_args();
    CHECK(t.cml == t.mu);
    CHECK(t.mu > t.delta);
  }
}

TEST_CASE("reports are sorted, complete and independent of threading") {
  VerifyOptions one;
  one.suite = "reductions";
  one.threads = 1;
  VerifyOptions many = one;
  many.threads = 4;
  const auto a = run_verification(one);
  const auto b = run_verification(many);
  REQUIRE(a.size() == 8 * 30);
  REQUIRE(a.size() == b.size());
  CHECK(std::is_sorted(a.begin(), a.end(),
                       [](const NamedCheck& x, const NamedCheck& y) { return x.name < y.name; }));
  std::set<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].report.lhs == b[i].report.lhs);
    CHECK(a[i].report.rhs == b[i].report.rhs);
    names.insert(a[i].name);
  }
  CHECK(names.size() == a.size());
  CHECK(required_checks_passed(a));
}

TEST_CASE("suite selection reuses the same tuples as the full run") {
  VerifyOptions m;
  m.suite = "fractional";
  const auto alone = run_verification(m);
  m.suite = "all";
  const auto all = run_verification(m);
  for (const auto& c : alone) {
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const NamedCheck& x) { return x.name == c.name; });
    REQUIRE(it != all.end());
    CHECK(it->report.lhs == c.report.lhs);
  }
}

TEST_CASE("claims never gate the outcome") {
  VerifyOptions o;
  o.suite = "claims";
  const auto r = run_verification(o);
  CHECK(r.size() == 20);
  for (const auto& c : r) {
    CHECK(c.informational);
    CHECK(c.error.empty());
  }
  CHECK(required_checks_passed(r));
}

TEST_CASE("tolerance override and unknown suites") {
  VerifyOptions o;
  o.suite = "reductions";
  o.tol = 1e-300;
  const auto r = run_verification(o);
  CHECK_FALSE(required_checks_passed(r));
  for (const auto& c : r) CHECK(c.report.tol == 1e-300);
  o.suite = "nope";
  CHECK_THROWS_AS(run_verification(o), DomainError);
}
