#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qlg/algebra.hpp"
#include "qlg/dynamics.hpp"
#include "qlg/family.hpp"
#include "qlg/golden_section.hpp"

namespace qlg {

/// How the three evolution operators (V12, V23, V13) are assembled from the
/// family for measurement times (0, T, 2T):
///   Exp: V12 = V23 = U_p(T),        V13 = U_p(2T)   (breaks V13 = V23 V12)
///   A:   V12 = V23 = U_p(T),        V13 = U_p(T)^2  (homogeneous evolution)
///   B:   V12 = U_p(T), V23 = U~_p(2T, T), V13 = U_p(2T)
enum class Scenario { Exp, A, B };

inline std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Exp:
      return "exp";
    case Scenario::A:
      return "a";
    case Scenario::B:
      return "b";
  }
  return "?";
}

inline Scenario scenario_from_string(std::string_view name) {
  if (name == "exp" || name == "Exp" || name == "EXP") return Scenario::Exp;
  if (name == "a" || name == "A") return Scenario::A;
  if (name == "b" || name == "B") return Scenario::B;
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected exp, a, or b)");
}

template <class Real>
struct ScenarioUnitaries {
  Operator2<Real> v12, v23, v13;
};

template <class Real>
struct K3Record {
  Scenario scenario;
  FamilyParams<Real> params;
  Real T;
  Real c12, c23, c13;
  Real k3;
  Real composition_defect;
};

template <class Real>
struct MaximizerResult {
  Real k3_max;
  Real t_star;
  Scenario scenario;
};

/// Two-time correlator of Q = sigma_z for the maximally mixed initial state:
/// C = (1/2) Re tr[sigma_z V sigma_z V^dag]. Real by construction; lies in
/// [-1, 1]. Rejects non-unitary V.
template <class Derived>
detail::RealOf<Derived> correlator(const Eigen::MatrixBase<Derived>& v) {
  using Real = detail::RealOf<Derived>;
  const Operator2<Real> vm = v.derived();
  if (!is_unitary(vm, Real(1e-10))) {
    throw std::invalid_argument("correlator: evolution operator is not unitary");
  }
  const Operator2<Real> sz = pauli<Real>(Axis::Z);
  const std::complex<Real> c = Real(0.5) * (sz * vm * sz * vm.adjoint()).trace();
  if (std::abs(c.imag()) > Real(1e-12)) {
    throw std::logic_error("correlator: trace acquired an imaginary part");
  }
  return c.real();
}

template <class Real>
ScenarioUnitaries<Real> scenario_unitaries(const FamilyParams<Real>& p, Real T,
                                           Scenario s) {
  if (!(T >= Real(0))) {
    throw std::invalid_argument("scenario_unitaries: T must be >= 0");
  }
  const Operator2<Real> uT = u_p(p, T);
  switch (s) {
    case Scenario::Exp:
      return {uT, uT, u_p(p, 2 * T)};
    case Scenario::A:
      return {uT, uT, uT * uT};
    case Scenario::B:
      return {uT, u_tilde(p, 2 * T, T), u_p(p, 2 * T)};
  }
  throw std::logic_error("scenario_unitaries: unreachable");
}

/// ||V13 - V23 V12||_F, the violation of the composition law V13 = V23 V12.
/// Zero for any protocol generated by a single consistent evolution.
template <class D12, class D23, class D13>
detail::RealOf<D12> composition_defect(const Eigen::MatrixBase<D12>& v12,
                                       const Eigen::MatrixBase<D23>& v23,
                                       const Eigen::MatrixBase<D13>& v13) {
  using Real = detail::RealOf<D12>;
  const Operator2<Real> a = v12.derived();
  const Operator2<Real> b = v23.derived();
  const Operator2<Real> c = v13.derived();
  if (!is_unitary(a, Real(1e-10)) || !is_unitary(b, Real(1e-10)) ||
      !is_unitary(c, Real(1e-10))) {
    throw std::invalid_argument("composition_defect: inputs must be unitary");
  }
  return frobenius_distance(c, b * a);
}

/// All three correlators, K3 = C12 + C23 - C13, and the composition defect
/// for one scenario at interval T in [0, pi].
template <class Real>
K3Record<Real> k3(const FamilyParams<Real>& p, Real T, Scenario s) {
  if (!(T >= Real(0)) || T > std::numbers::pi_v<Real>) {
    throw std::invalid_argument("k3: T must lie in [0, pi]");
  }
  const ScenarioUnitaries<Real> v = scenario_unitaries(p, T, s);
  const Real c12 = correlator(v.v12);
  const Real c23 = correlator(v.v23);
  const Real c13 = correlator(v.v13);
  return {s, p, T, c12, c23, c13, c12 + c23 - c13,
          composition_defect(v.v12, v.v23, v.v13)};
}

/// Maximizes K3 over T in [0, pi]: coarse scan on a uniform grid, then
/// golden-section refinement inside the bracket around the best grid point.
template <class Real>
MaximizerResult<Real> k3_max_over_T(const FamilyParams<Real>& p, Scenario s,
                                    int grid_points, Real refine_tol) {
  if (grid_points < 64) {
    throw std::invalid_argument("k3_max_over_T: grid_points must be >= 64");
  }
  if (!(refine_tol > Real(0))) {
    throw std::invalid_argument("k3_max_over_T: refine_tol must be positive");
  }
  const Real pi = std::numbers::pi_v<Real>;
  const auto value = [&](Real T) { return k3(p, T, s).k3; };

  int best = 0;
  Real best_value = value(Real(0));
  for (int j = 1; j < grid_points; ++j) {
    const Real T = pi * Real(j) / Real(grid_points - 1);
    const Real v = value(T);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  const Real lo = pi * Real(std::max(best - 1, 0)) / Real(grid_points - 1);
  const Real hi = pi * Real(std::min(best + 1, grid_points - 1)) / Real(grid_points - 1);
  const GoldenSectionResult<Real> refined =
      golden_section_maximize(value, lo, hi, refine_tol);

  if (refined.value > best_value) {
    return {refined.value, refined.x, s};
  }
  return {best_value, pi * Real(best) / Real(grid_points - 1), s};
}

}  // namespace qlg
