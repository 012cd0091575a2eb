#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ellipselaw {

// The plane is identified with C: x = (x1, x2) <-> z = x1 + i x2.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// x_perp = (x2, -x1), i.e. -i z.
inline Complex perp(Complex z) { return {z.imag(), -z.real()}; }

// sqrt(z^2 + c2) on the branch that preserves quadrants:
//   Re(z) Re(w) >= 0,  Im(z) Im(w) >= 0,  w ~ z as |z| -> inf.
// The branch cut is the segment [-i sqrt(c2), i sqrt(c2)]. Points strictly
// inside the cut are rejected; the endpoints map to w = 0.
//
// Realized by taking the principal root of z^2 + c2 and flipping its sign
// when the quadrant inequalities fail.
inline Complex branch_sqrt(Complex z, double c2) {
  if (!is_finite(z) || !(c2 >= 0.0)) {
    throw std::invalid_argument("branch_sqrt: non-finite input");
  }
  if (z.real() == 0.0 && z.imag() * z.imag() < c2) {
    throw std::domain_error("branch_sqrt: point lies inside the branch cut");
  }
  const Complex w = std::sqrt(z * z + c2);
  const auto preserves = [&z](Complex cand) {
    return z.real() * cand.real() >= 0.0 && z.imag() * cand.imag() >= 0.0;
  };
  if (preserves(w)) return w;
  if (preserves(-w)) return -w;
  // Unreachable off the cut; keep the root asymptotic to z.
  return (z.real() * w.real() >= 0.0) ? w : -w;
}

// h(z) = 1/(z + sqrt(z^2 + c2)). For c2 > 0 this equals
// (sqrt(z^2 + c2) - z)/c2; the additive form is the numerically stable one
// since the branch root carries the sign of z.
inline Complex h_func(Complex z, double c2) {
  return 1.0 / (z + branch_sqrt(z, c2));
}

// h'(z) = -h(z)/sqrt(z^2 + c2).
inline Complex h_prime(Complex z, double c2) {
  return -h_func(z, c2) / branch_sqrt(z, c2);
}

}  // namespace ellipselaw
