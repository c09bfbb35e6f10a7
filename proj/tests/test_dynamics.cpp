#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qlg/dynamics.hpp"

using namespace qlg;

namespace {
constexpr double kPi = std::numbers::pi;
const FamilyParamsd kRef(0.9 * kPi, kPi / 4);  // strongly non-homogeneous member
}

TEST_CASE("gamma_angle limits and quadrant") {
  CHECK(gamma_angle(FamilyParamsd(1.3, 0.0)) == 0.0);
  // alpha = pi/2 leaves only the sigma_phi exponential: gamma = phi
  CHECK(gamma_angle(FamilyParamsd(1.3, kPi / 2)) == doctest::Approx(1.3).epsilon(1e-14));
  // cos(alpha) + cos(phi) sin(alpha) < 0 must land gamma beyond pi/2
  CHECK(gamma_angle(FamilyParamsd(3.1, 1.4)) > kPi / 2);
  CHECK(gamma_angle(kRef) > 0.0);
  CHECK(gamma_angle(kRef) < kPi);
}

TEST_CASE("spectral data at the reference parameters") {
  const SpectralData<double> sd = spectral(kRef);
  // frozen from an independent matrix-exponential oracle
  CHECK(std::abs(sd.energy_prefactor - 0.31286893008046185) < 1e-12);
  CHECK(std::abs(energy(kRef, 0.0) - 0.15643446504023092) < 1e-12);
  CHECK(std::abs(phase_ratio(kRef) - 0.15643446504023092) < 1e-12);

  CHECK(frobenius_distance(sd.direction, sd.direction.adjoint()) < 1e-15);
  CHECK(frobenius_distance(sd.direction * sd.direction, Operator2d::Identity()) <
        1e-15);
}

TEST_CASE("energy is periodic and positive") {
  for (const double t : {0.0, 0.4, 1.1, 2.7}) {
    CHECK(energy(kRef, t) > 0.0);
    CHECK(std::abs(energy(kRef, t + kPi) - energy(kRef, t)) < 1e-13);
  }
  // alpha = 0 freezes the modulation entirely
  const FamilyParamsd plain(0.8, 0.0);
  for (const double t : {0.0, 0.9, 2.2}) {
    CHECK(energy(plain, t) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("hamiltonian is Hermitian, traceless, and matches finite differences") {
  for (const double t : {-1.2, 0.0, 0.6, 1.5}) {
    const Operator2d h = hamiltonian(kRef, t);
    CHECK(frobenius_distance(h, h.adjoint()) < 1e-14);
    CHECK(std::abs(h.trace()) < 1e-14);
    CHECK(frobenius_distance(h, hamiltonian_numeric(kRef, t, 1e-5)) < 1e-7);
  }

  SUBCASE("reference time drops out") {
    const Operator2d a = hamiltonian_numeric(kRef, 0.9, 1e-5, 0.0);
    const Operator2d b = hamiltonian_numeric(kRef, 0.9, 1e-5, 0.7);
    CHECK(frobenius_distance(a, b) < 1e-6);
  }

  SUBCASE("step validation") {
    CHECK_THROWS_AS(hamiltonian_numeric(kRef, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_numeric(kRef, 0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_numeric(kRef, 0.0, -1e-5), std::invalid_argument);
  }
}

TEST_CASE("tau fixed points and branch structure") {
  for (const auto& p : {kRef, FamilyParamsd(0.95, kPi / 8), FamilyParamsd(0.3, 1.1)}) {
    CHECK(tau(p, 0.0) == 0.0);
    // arctan(k tan t) -> pi/2 as t -> pi/2 regardless of k, and the branch
    // count adds pi per half-period
    CHECK(std::abs(tau(p, kPi / 2) - kPi / 2) < 1e-10);
    CHECK(std::abs(tau(p, kPi) - kPi) < 1e-12);
    CHECK(std::abs(tau(p, -kPi / 2) + kPi / 2) < 1e-10);

    for (const double t : {0.2, 0.9, 1.8, 2.9}) {
      CHECK(std::abs(tau(p, t + kPi) - tau(p, t) - kPi) < 1e-12);
      CHECK(std::abs(tau(p, -t) + tau(p, t)) < 1e-12);  // odd function
    }
  }
}

TEST_CASE("tau is continuous through the tangent pole") {
  const double eps = 1e-9;
  const double gap = tau(kRef, kPi / 2 + eps) - tau(kRef, kPi / 2 - eps);
  CHECK(gap > 0.0);
  CHECK(gap < 2 * eps * 10.0);  // bounded by 2 eps max E
}

TEST_CASE("tau derivative reproduces the energy") {
  const double h = 1e-5;
  for (const auto& p : {kRef, FamilyParamsd(2.0, 0.3)}) {
    for (int j = 0; j < 100; ++j) {
      const double t = kPi * j / 99.0;
      const double slope = (tau(p, t + h) - tau(p, t - h)) / (2 * h);
      CHECK(std::abs(slope - energy(p, t)) < 1e-6);
    }
  }
}

TEST_CASE("propagator forms agree") {
  const double t1 = -0.8, t2 = 1.1;
  const Operator2d direct = u_tilde(kRef, t2, t1);
  const Operator2d closed = propagator_closed(kRef, t2, t1);
  CHECK(is_unitary(closed, 1e-12));
  CHECK(frobenius_distance(direct, closed) < 1e-10);

  const double coarse = frobenius_distance(closed, propagator_stepped(kRef, t2, t1, 100));
  const double fine = frobenius_distance(closed, propagator_stepped(kRef, t2, t1, 10000));
  CHECK(coarse < 1e-2);
  CHECK(fine < 1e-6);
  CHECK(fine < coarse);  // second-order convergence in the step count

  CHECK_THROWS_AS(propagator_stepped(kRef, 0.0, 1.0, 0), std::invalid_argument);
}
