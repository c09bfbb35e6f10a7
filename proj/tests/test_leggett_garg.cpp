#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qlg/leggett_garg.hpp"

using namespace qlg;

namespace {
constexpr double kPi = std::numbers::pi;
const FamilyParamsd kRef(0.9 * kPi, kPi / 4);
}

TEST_CASE("scenario names round-trip") {
  for (const Scenario s : {Scenario::Exp, Scenario::A, Scenario::B}) {
    CHECK(scenario_from_string(to_string(s)) == s);
  }
  CHECK(scenario_from_string("EXP") == Scenario::Exp);
  CHECK(scenario_from_string("B") == Scenario::B);
  CHECK_THROWS_AS(scenario_from_string("c"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_from_string(""), std::invalid_argument);
}

TEST_CASE("correlator closed form on rotations") {
  CHECK(correlator(Operator2d::Identity()) == doctest::Approx(1.0));
  // V = e^{-i theta sigma_x}: C = cos(2 theta); sigma_z flips under a pi/2
  // x-rotation, giving C = -1 at theta = pi/2
  for (const double theta : {0.0, 0.3, 1.0, kPi / 2}) {
    const Operator2d v = exp_traceless_hermitian(pauli(Axis::X), theta);
    CHECK(std::abs(correlator(v) - std::cos(2 * theta)) < 1e-13);
  }
  // insensitive to a global phase
  const Operator2d v = std::polar(1.0, 0.77) *
                       exp_traceless_hermitian(pauli(Axis::Y), 0.41);
  CHECK(std::abs(correlator(v) - std::cos(2 * 0.41)) < 1e-13);

  CHECK_THROWS_AS(correlator(Operator2d(2.0 * Operator2d::Identity())),
                  std::invalid_argument);
}

TEST_CASE("scenario_unitaries wiring") {
  const double T = 0.7;
  const auto exp_v = scenario_unitaries(kRef, T, Scenario::Exp);
  const auto a_v = scenario_unitaries(kRef, T, Scenario::A);
  const auto b_v = scenario_unitaries(kRef, T, Scenario::B);

  CHECK(frobenius_distance(exp_v.v12, exp_v.v23) == 0.0);
  CHECK(frobenius_distance(exp_v.v12, u_p(kRef, T)) == 0.0);
  CHECK(frobenius_distance(exp_v.v13, u_p(kRef, 2 * T)) == 0.0);

  CHECK(frobenius_distance(a_v.v13, Operator2d(a_v.v12 * a_v.v12)) < 1e-15);
  CHECK(frobenius_distance(b_v.v23, u_tilde(kRef, 2 * T, T)) == 0.0);

  // the two legitimate protocols compose; the reconstructed one does not
  CHECK(composition_defect(a_v.v12, a_v.v23, a_v.v13) < 1e-14);
  CHECK(composition_defect(b_v.v12, b_v.v23, b_v.v13) < 1e-13);
  CHECK(composition_defect(exp_v.v12, exp_v.v23, exp_v.v13) > 0.1);

  CHECK_THROWS_AS(scenario_unitaries(kRef, -0.1, Scenario::A),
                  std::invalid_argument);
}

TEST_CASE("composition defect frozen regression point") {
  const auto v = scenario_unitaries(kRef, 0.8, Scenario::Exp);
  const double defect = composition_defect(v.v12, v.v23, v.v13);
  // frozen from an independent matrix-exponential oracle
  CHECK(std::abs(defect - 1.8607731050267171) < 1e-9);
}

TEST_CASE("k3 record assembly and domain") {
  const K3Record<double> r = k3(kRef, 0.6, Scenario::B);
  CHECK(r.scenario == Scenario::B);
  CHECK(r.T == 0.6);
  CHECK(r.k3 == doctest::Approx(r.c12 + r.c23 - r.c13).epsilon(1e-15));
  CHECK(std::abs(r.c12) <= 1.0 + 1e-12);
  CHECK(r.composition_defect < 1e-12);

  CHECK_THROWS_AS(k3(kRef, -0.01, Scenario::A), std::invalid_argument);
  CHECK_THROWS_AS(k3(kRef, kPi + 0.01, Scenario::A), std::invalid_argument);
}

TEST_CASE("k3 for scenario B never beats the quantum bound") {
  for (int j = 0; j <= 128; ++j) {
    const double T = kPi * j / 128.0;
    CHECK(k3(kRef, T, Scenario::B).k3 <= 1.5 + 1e-9);
  }
}

TEST_CASE("k3 maximization") {
  SUBCASE("classical collapse at alpha = 0") {
    // K3(T) = 2 cos 2T - cos 4T: maximum 1.5 at T = pi/6 (and mirrored at
    // 5 pi/6)
    const FamilyParamsd plain(1.234, 0.0);
    const auto m = k3_max_over_T(plain, Scenario::A, 1024, 1e-10);
    CHECK(std::abs(m.k3_max - 1.5) < 1e-6);
    const double folded = std::min(m.t_star, kPi - m.t_star);
    CHECK(std::abs(folded - kPi / 6) < 1e-4);
  }

  SUBCASE("scenario A stays on the bound at the reference parameters") {
    const auto m = k3_max_over_T(kRef, Scenario::A, 1024, 1e-10);
    CHECK(std::abs(m.k3_max - 1.5) < 1e-6);
  }

  SUBCASE("the reconstructed protocol appears to break the bound") {
    const auto m = k3_max_over_T(kRef, Scenario::Exp, 1024, 1e-10);
    CHECK(m.k3_max > 2.5);
    CHECK(m.t_star > 0.0);
    CHECK(m.t_star < kPi);
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(k3_max_over_T(kRef, Scenario::A, 32, 1e-10),
                    std::invalid_argument);
    CHECK_THROWS_AS(k3_max_over_T(kRef, Scenario::A, 1024, 0.0),
                    std::invalid_argument);
  }
}
