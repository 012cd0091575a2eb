#pragma once

#include <cmath>
#include <stdexcept>

#include "ellipselaw/complex_core.hpp"

namespace ellipselaw {

enum class Region { Inside, Boundary, Outside };

// Relative half-width of the boundary band used by classify().
inline constexpr double kBoundaryBand = 1e-12;

// The region Omega(a,b) = { x : x1^2/a^2 + x2^2/b^2 < 1 }, horizontal
// semi-axis a, vertical semi-axis b. Both orientations are representable;
// the closed-form potentials additionally require b >= a (see closed_form.hpp).
class EllipseDomain {
 public:
  EllipseDomain(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
      throw std::invalid_argument("EllipseDomain: semi-axes must be positive and finite");
    }
  }

  double a() const { return a_; }
  double b() const { return b_; }

  double lambda() const { return (a_ - b_) / (a_ + b_); }
  double c2() const { return b_ * b_ - a_ * a_; }
  double area() const { return M_PI * a_ * b_; }

  // x1^2/a^2 + x2^2/b^2; equals 1 on the boundary.
  double quadratic(Complex z) const {
    const double u = z.real() / a_, v = z.imag() / b_;
    return u * u + v * v;
  }

  Region classify(Complex z, double band = kBoundaryBand) const {
    const double q = quadratic(z);
    if (q < 1.0 - band) return Region::Inside;
    if (q <= 1.0 + band) return Region::Boundary;
    return Region::Outside;
  }

  Complex boundary_point(double theta) const {
    return {a_ * std::cos(theta), b_ * std::sin(theta)};
  }

 private:
  double a_, b_;
};

inline Complex h_func(Complex z, const EllipseDomain& e) {
  return h_func(z, e.c2());
}

inline Complex h_prime(Complex z, const EllipseDomain& e) {
  return h_prime(z, e.c2());
}

}  // namespace ellipselaw
