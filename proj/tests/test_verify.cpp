#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <set>
#include <string>

#include "qlg/verify.hpp"

using namespace qlg;

namespace {

// Small sample count keeps the suite fast; every check still runs.
VerifyOptions quick() {
  VerifyOptions o;
  o.samples = 40;
  return o;
}

bool check_failed(const VerifyReport& report, const std::string& name) {
  const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                               [&](const CheckResult& c) { return c.name == name; });
  REQUIRE(it != report.checks.end());
  return !it->passed;
}

}  // namespace

TEST_CASE("uniform01 stays in the half-open unit interval") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(rng);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("ParamSampler respects domain and conditioning margin") {
  std::mt19937_64 rng(11);
  const ParamSampler draw;
  for (int i = 0; i < 500; ++i) {
    const FamilyParamsd p = draw(rng);
    CHECK(p.phi >= 0.0);
    CHECK(p.phi < std::numbers::pi);
    CHECK(p.alpha >= 0.0);
    CHECK(p.alpha <= std::numbers::pi / 2);
    CHECK(p.min_norm_sq() >= draw.margin);
  }
}

TEST_CASE("run_verification passes on the production build") {
  const VerifyReport report = run_verification(quick());
  for (const CheckResult& c : report.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.passed);
  }
  CHECK(report.all_passed());

  SUBCASE("check names are unique and stable") {
    std::set<std::string> names;
    for (const CheckResult& c : report.checks) {
      names.insert(c.name);
    }
    CHECK(names.size() == report.checks.size());
    CHECK(names.count("tau-derivative-matches-energy") == 1);
    CHECK(names.count("hamiltonian-matches-finite-difference") == 1);
    CHECK(names.count("composition-defect-audit") == 1);
    CHECK(names.count("ttb-bound-compliance") == 1);
  }

  SUBCASE("deterministic given the seed") {
    const VerifyReport again = run_verification(quick());
    REQUIRE(again.checks.size() == report.checks.size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      CHECK(again.checks[i].detail == report.checks[i].detail);
    }
  }
}

TEST_CASE("run_verification argument validation") {
  VerifyOptions o;
  o.samples = 0;
  CHECK_THROWS_AS(run_verification(o), std::invalid_argument);
  o.samples = 10;
  o.tol_scale = 0.0;
  CHECK_THROWS_AS(run_verification(o), std::invalid_argument);
  o.tol_scale = -2.0;
  CHECK_THROWS_AS(run_verification(o), std::invalid_argument);
}

TEST_CASE("fault injection trips the matching check") {
  VerifyOptions o;
  o.samples = 120;  // enough draws to cover the flipped-quadrant region

  SUBCASE("misplaced phase-ratio radical") {
    const VerifyReport r = run_verification(o, make_fault_hooks("tau-radical"));
    CHECK_FALSE(r.all_passed());
    CHECK(check_failed(r, "tau-derivative-matches-energy"));
  }

  SUBCASE("dropped quadrant correction") {
    const VerifyReport r = run_verification(o, make_fault_hooks("gamma-quadrant"));
    CHECK_FALSE(r.all_passed());
    CHECK(check_failed(r, "hamiltonian-matches-finite-difference"));
  }

  SUBCASE("experimental protocol mislabeled as composing") {
    const VerifyReport r = run_verification(o, make_fault_hooks("exp-composition"));
    CHECK_FALSE(r.all_passed());
    CHECK(check_failed(r, "composition-defect-audit"));
  }

  SUBCASE("unknown fault name") {
    CHECK_THROWS_AS(make_fault_hooks("bitflip"), std::invalid_argument);
  }
}
