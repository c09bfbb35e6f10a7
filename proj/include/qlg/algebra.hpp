#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qlg {

template <class Real>
using Operator2 = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <class Real>
using State2 = Eigen::Matrix<std::complex<Real>, 2, 1>;

using Operator2d = Operator2<double>;
using State2d = State2<double>;

// Dimensionless scaled time, t = omega*(t_f - t_0)/2 in physical units.
using ScaledTime = double;

namespace detail {

template <class Derived>
using RealOf = typename Eigen::NumTraits<typename Derived::Scalar>::Real;

template <class Real>
void require_finite(Real x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + ": non-finite value");
  }
}

}  // namespace detail

enum class Axis { X, Y, Z, Identity };

template <class Real = double>
Operator2<Real> pauli(Axis axis) {
  using C = std::complex<Real>;
  Operator2<Real> m;
  switch (axis) {
    case Axis::X:
      m << C(0), C(1), C(1), C(0);
      break;
    case Axis::Y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case Axis::Z:
      m << C(1), C(0), C(0), C(-1);
      break;
    case Axis::Identity:
      m = Operator2<Real>::Identity();
      break;
  }
  return m;
}

/// Frobenius distance sqrt(sum |a_ij - b_ij|^2). Accepts Eigen expressions.
template <class DerivedA, class DerivedB>
detail::RealOf<DerivedA> frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  return (a.derived() - b.derived()).norm();
}

/// e^{-i theta h} = cos(theta) I - i sin(theta) h, valid for Hermitian
/// involutory h (h^2 = I). Inputs outside that class are rejected.
template <class Derived>
Operator2<detail::RealOf<Derived>> exp_traceless_hermitian(
    const Eigen::MatrixBase<Derived>& h, detail::RealOf<Derived> theta) {
  using Real = detail::RealOf<Derived>;
  const Operator2<Real> hm = h.derived();
  const Operator2<Real> id = Operator2<Real>::Identity();
  if (frobenius_distance(hm, hm.adjoint()) > Real(1e-9)) {
    throw std::invalid_argument("exp_traceless_hermitian: operator is not Hermitian");
  }
  if (frobenius_distance(hm * hm, id) > Real(1e-9)) {
    throw std::invalid_argument("exp_traceless_hermitian: operator is not involutory");
  }
  detail::require_finite(theta, "exp_traceless_hermitian: theta");
  return std::cos(theta) * id - std::complex<Real>(0, 1) * std::sin(theta) * hm;
}

/// True iff ||a^dag a - I||_F <= tol. tol must be positive.
template <class Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a, detail::RealOf<Derived> tol) {
  using Real = detail::RealOf<Derived>;
  if (!(tol > Real(0))) {
    throw std::invalid_argument("is_unitary: tolerance must be positive");
  }
  const Operator2<Real> am = a.derived();
  return frobenius_distance(am.adjoint() * am, Operator2<Real>::Identity()) <= tol;
}

/// Applies a unitary to a pure state. Rejects operators that fail the
/// unitarity check at 1e-10.
template <class DerivedS, class DerivedU>
State2<detail::RealOf<DerivedU>> evolve(const Eigen::MatrixBase<DerivedS>& state,
                                        const Eigen::MatrixBase<DerivedU>& u) {
  using Real = detail::RealOf<DerivedU>;
  const Operator2<Real> um = u.derived();
  if (!is_unitary(um, Real(1e-10))) {
    throw std::invalid_argument("evolve: operator is not unitary within 1e-10");
  }
  return um * state.derived();
}

}  // namespace qlg
