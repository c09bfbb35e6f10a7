#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlg/algebra.hpp"

namespace qlg {

// Lower bound on min_t n_p^2(t) = 1 + cos(phi) sin(2 alpha). Parameter pairs
// below it make U_p numerically ill-conditioned and are rejected outright.
inline constexpr double kDegeneracyFloor = 1e-9;

/// The pair p = (phi, alpha) selecting one member of the unitary family.
/// phi in [0, pi), alpha in [0, pi/2], and the normalization must stay
/// bounded away from zero for all t.
template <class Real>
struct FamilyParams {
  Real phi;
  Real alpha;

  FamilyParams(Real phi_, Real alpha_) : phi(phi_), alpha(alpha_) {
    detail::require_finite(phi, "FamilyParams: phi");
    detail::require_finite(alpha, "FamilyParams: alpha");
    if (phi < Real(0) || phi >= std::numbers::pi_v<Real>) {
      throw std::invalid_argument("FamilyParams: phi must lie in [0, pi)");
    }
    if (alpha < Real(0) || alpha > std::numbers::pi_v<Real> / 2) {
      throw std::invalid_argument("FamilyParams: alpha must lie in [0, pi/2]");
    }
    if (min_norm_sq() < Real(kDegeneracyFloor)) {
      throw std::invalid_argument(
          "FamilyParams: degenerate normalization, 1 + cos(phi) sin(2 alpha) < 1e-9");
    }
  }

  /// min over t of n_p^2(t), attained at t = pi/2.
  Real min_norm_sq() const { return Real(1) + std::cos(phi) * std::sin(2 * alpha); }
};

using FamilyParamsd = FamilyParams<double>;

/// sigma_phi = cos(phi) sigma_x + sin(phi) sigma_y. Hermitian, traceless,
/// squares to the identity for any real phi.
template <class Real>
Operator2<Real> sigma_phi(Real phi) {
  detail::require_finite(phi, "sigma_phi: phi");
  using C = std::complex<Real>;
  Operator2<Real> m;
  m << C(0), std::polar(Real(1), -phi), std::polar(Real(1), phi), C(0);
  return m;
}

/// W_p(t) = cos(alpha) e^{-i t sigma_x} + sin(alpha) e^{-i t sigma_phi}.
template <class Real>
Operator2<Real> w_matrix(const FamilyParams<Real>& p, Real t) {
  detail::require_finite(t, "w_matrix: t");
  return std::cos(p.alpha) * exp_traceless_hermitian(pauli<Real>(Axis::X), t) +
         std::sin(p.alpha) * exp_traceless_hermitian(sigma_phi(p.phi), t);
}

/// The scalar n_p^2(t) with W^dag W = n_p^2 I:
/// n_p^2 = 1 + (cos^2 t + cos(phi) sin^2 t) sin(2 alpha).
template <class Real>
Real norm_sq(const FamilyParams<Real>& p, Real t) {
  detail::require_finite(t, "norm_sq: t");
  const Real ct = std::cos(t);
  const Real st = std::sin(t);
  const Real n2 = Real(1) + (ct * ct + std::cos(p.phi) * st * st) * std::sin(2 * p.alpha);
  if (n2 < Real(kDegeneracyFloor)) {
    throw std::domain_error("norm_sq: degenerate normalization");
  }
  return n2;
}

/// U_p(t) = W_p(t)/n_p(t), unitary with U_p(0) = I. The positive square
/// root fixes the global phase.
template <class Real>
Operator2<Real> u_p(const FamilyParams<Real>& p, Real t) {
  return w_matrix(p, t) / std::sqrt(norm_sq(p, t));
}

/// Two-time propagator U_p(t2) U_p^dag(t1). Depends on both endpoints, not
/// just their difference: the family is not homogeneous in time.
template <class Real>
Operator2<Real> u_tilde(const FamilyParams<Real>& p, Real t2, Real t1) {
  return u_p(p, t2) * u_p(p, t1).adjoint();
}

}  // namespace qlg
