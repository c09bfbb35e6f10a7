#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qlg/algebra.hpp"
#include "qlg/family.hpp"

namespace qlg {

/// Time-independent spectral structure of the generating Hamiltonian
/// H_p(t) = E_p(t) * direction, with direction = sigma_gamma and
/// E_p(t) = energy_prefactor / n_p^2(t).
template <class Real>
struct SpectralData {
  Real gamma;                 // in [0, pi]
  Operator2<Real> direction;  // sigma_gamma; Hermitian, traceless, involutory
  Real energy_prefactor;      // (cos a + sin a) sqrt(1 + cos(phi) sin(2a)) > 0
};

/// Direction angle gamma with tan(gamma) = sin(phi) sin(a) / (cos a + cos(phi) sin a),
/// taken quadrant-correct via atan2. The numerator is nonnegative on the
/// parameter domain, so gamma lands in [0, pi].
template <class Real>
Real gamma_angle(const FamilyParams<Real>& p) {
  const Real sa = std::sin(p.alpha);
  return std::atan2(std::sin(p.phi) * sa, std::cos(p.alpha) + std::cos(p.phi) * sa);
}

template <class Real>
SpectralData<Real> spectral(const FamilyParams<Real>& p) {
  const Real g = gamma_angle(p);
  const Real prefactor = (std::cos(p.alpha) + std::sin(p.alpha)) *
                         std::sqrt(Real(1) + std::cos(p.phi) * std::sin(2 * p.alpha));
  return {g, sigma_phi(g), prefactor};
}

/// Instantaneous eigenvalue magnitude E_p(t), periodic with period pi.
template <class Real>
Real energy(const FamilyParams<Real>& p, Real t) {
  return spectral(p).energy_prefactor / norm_sq(p, t);
}

/// H_p(t) = E_p(t) sigma_gamma: fixed direction, time-dependent magnitude.
template <class Real>
Operator2<Real> hamiltonian(const FamilyParams<Real>& p, Real t) {
  const SpectralData<Real> sd = spectral(p);
  return (sd.energy_prefactor / norm_sq(p, t)) * sd.direction;
}

/// Finite-difference Hamiltonian i (dU~/dt) U~^dag built from the two-time
/// propagator with central differences, then Hermitized by averaging with
/// its adjoint. The reference time t0 drops out of the result.
template <class Real>
Operator2<Real> hamiltonian_numeric(const FamilyParams<Real>& p, Real t, Real h,
                                    Real t0 = Real(0)) {
  detail::require_finite(t, "hamiltonian_numeric: t");
  if (!(h > Real(0)) || h > Real(1e-3)) {
    throw std::invalid_argument("hamiltonian_numeric: step must lie in (0, 1e-3]");
  }
  const Operator2<Real> du =
      (u_tilde(p, t + h, t0) - u_tilde(p, t - h, t0)) / (2 * h);
  const Operator2<Real> hn =
      std::complex<Real>(0, 1) * du * u_tilde(p, t, t0).adjoint();
  return (hn + hn.adjoint()) / Real(2);
}

/// k = sqrt((1 + cos(phi) sin(2a)) / (1 + sin(2a))), in (0, 1] on the
/// valid domain. The phase integral is tau = arctan(k tan t) up to branch
/// shifts.
template <class Real>
Real phase_ratio(const FamilyParams<Real>& p) {
  const Real s2a = std::sin(2 * p.alpha);
  return std::sqrt((Real(1) + std::cos(p.phi) * s2a) / (Real(1) + s2a));
}

/// Phase integral tau(t) = int_0^t E_p(t') dt'.
///
/// Branch reduction: with n = floor(t/pi + 1/2) and t' = t - n pi in
/// [-pi/2, pi/2), tau = arctan(k tan t') + n pi. The arctan-tan pair is
/// evaluated as atan2(k sin t', cos t'), which is identical on the open
/// interval and takes the correct limit value n pi - pi/2 at the tan pole
/// t' = -pi/2, so no near-pole tangent is ever formed. Continuous, strictly
/// increasing, tau(0) = 0, tau(t + pi) = tau(t) + pi.
template <class Real>
Real tau(const FamilyParams<Real>& p, Real t) {
  detail::require_finite(t, "tau: t");
  const Real pi = std::numbers::pi_v<Real>;
  const Real k = phase_ratio(p);
  const Real n = std::floor(t / pi + Real(0.5));
  const Real tr = t - n * pi;
  return std::atan2(k * std::sin(tr), std::cos(tr)) + n * pi;
}

/// U~_p(t2, t1) = e^{-i (tau(t2) - tau(t1)) P} with P = sigma_gamma.
template <class Real>
Operator2<Real> propagator_closed(const FamilyParams<Real>& p, Real t2, Real t1) {
  return exp_traceless_hermitian(spectral(p).direction, tau(p, t2) - tau(p, t1));
}

/// Midpoint product integrator for the time-ordered exponential: the
/// ordered product of e^{-i E(t_mid) dt P} over n_steps uniform steps.
/// Converges to propagator_closed at O(n_steps^-2).
template <class Real>
Operator2<Real> propagator_stepped(const FamilyParams<Real>& p, Real t2, Real t1,
                                   int n_steps) {
  if (n_steps < 1) {
    throw std::invalid_argument("propagator_stepped: n_steps must be >= 1");
  }
  const SpectralData<Real> sd = spectral(p);
  const Real dt = (t2 - t1) / Real(n_steps);
  Operator2<Real> u = Operator2<Real>::Identity();
  for (int j = 0; j < n_steps; ++j) {
    const Real t_mid = t1 + (Real(j) + Real(0.5)) * dt;
    const Real e = sd.energy_prefactor / norm_sq(p, t_mid);
    u = exp_traceless_hermitian(sd.direction, e * dt) * u;
  }
  return u;
}

}  // namespace qlg
