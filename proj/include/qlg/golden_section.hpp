#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qlg {

template <class Real>
struct GoldenSectionResult {
  Real x;
  Real value;
};

/// Golden-section maximization of a unimodal f on [a, b]. Shrinks the
/// bracket until its width drops below tol, then evaluates the midpoint.
/// Deterministic for fixed inputs.
template <class Real, class F>
GoldenSectionResult<Real> golden_section_maximize(F&& f, Real a, Real b, Real tol,
                                                  int max_iterations = 200) {
  if (!(b > a)) {
    throw std::invalid_argument("golden_section_maximize: requires a < b");
  }
  if (!(tol > Real(0))) {
    throw std::invalid_argument("golden_section_maximize: tol must be positive");
  }
  const Real invphi = (std::sqrt(Real(5)) - 1) / 2;
  Real c = b - (b - a) * invphi;
  Real d = a + (b - a) * invphi;
  Real fc = f(c);
  Real fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = f(d);
    }
  }
  const Real x = (a + b) / 2;
  return {x, f(x)};
}

}  // namespace qlg
