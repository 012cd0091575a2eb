#pragma once

#include <limits>
#include <stdexcept>

#include "ellipselaw/complex_core.hpp"

namespace ellipselaw {

// Regime of the single-parameter kernel. The minimizer is an ellipse for
// 0 <= alpha < 1, the vertical semicircle law for alpha >= 1 (larger alpha
// has no further effect), and the coordinate-swapped picture for alpha < 0.
enum class Regime { Ellipse, Wall, Swapped };

// Weight of the x1^2/|x|^2 term in the interaction kernel.
struct Anisotropy {
  double alpha = 0.0;

  constexpr Anisotropy(double a = 0.0) : alpha(a) {}

  Regime regime() const {
    if (alpha < 0.0) return Regime::Swapped;
    return alpha < 1.0 ? Regime::Ellipse : Regime::Wall;
  }
};

// Quadratic-over-|x|^2 anisotropy (alpha x1^2 + beta x2^2 + gamma x1 x2)/|x|^2.
// {alpha, 0, 0} reproduces the single-parameter kernel exactly.
struct GeneralAnisotropy {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// W_alpha(x) = -1/2 log|x|^2 + alpha x1^2/|x|^2, extended by W_alpha(0) = +inf.
inline double w_alpha(Complex x, Anisotropy a) {
  const double n2 = std::norm(x);
  if (n2 == 0.0) return std::numeric_limits<double>::infinity();
  return -0.5 * std::log(n2) + a.alpha * x.real() * x.real() / n2;
}

// Gradient of W_alpha as a vector (dW/dx1, dW/dx2) encoded re + i im:
//   -x/|x|^2 + 2 alpha x1 x2 x_perp / |x|^4.
inline Complex grad_w_alpha(Complex x, Anisotropy a) {
  const double n2 = std::norm(x);
  if (n2 == 0.0) throw std::domain_error("grad_w_alpha: gradient undefined at 0");
  return -x / n2 + (2.0 * a.alpha * x.real() * x.imag() / (n2 * n2)) * perp(x);
}

// Same gradient through the complex route 2 dW/dzbar = -1/zbar + (alpha/2)(1/z)
// - (alpha/2) z/zbar^2. Kept as an independent expression for cross-checks.
inline Complex grad_w_alpha_complex(Complex z, Anisotropy a) {
  if (std::norm(z) == 0.0) {
    throw std::domain_error("grad_w_alpha_complex: gradient undefined at 0");
  }
  const Complex zb = std::conj(z);
  return -1.0 / zb + (0.5 * a.alpha) / z - (0.5 * a.alpha) * z / (zb * zb);
}

// W_{alpha,beta,gamma}(x) = -log|x| + (alpha x1^2 + beta x2^2 + gamma x1 x2)/|x|^2.
inline double w_general(Complex x, const GeneralAnisotropy& g) {
  const double n2 = std::norm(x);
  if (n2 == 0.0) return std::numeric_limits<double>::infinity();
  const double x1 = x.real(), x2 = x.imag();
  return -0.5 * std::log(n2) +
         (g.alpha * x1 * x1 + g.beta * x2 * x2 + g.gamma * x1 * x2) / n2;
}

// Anisotropic force F = -grad V, V the non-logarithmic part of W_{a,b,g}:
//   F(x) = (gamma x1^2 - gamma x2^2 + 2 (beta - alpha) x1 x2)/|x|^4 * x_perp.
// Vanishes exactly on two orthogonal lines through the origin.
inline Complex force_general(Complex x, const GeneralAnisotropy& g) {
  const double n2 = std::norm(x);
  if (n2 == 0.0) throw std::domain_error("force_general: undefined at 0");
  const double x1 = x.real(), x2 = x.imag();
  const double s =
      (g.gamma * (x1 * x1 - x2 * x2) + 2.0 * (g.beta - g.alpha) * x1 * x2) /
      (n2 * n2);
  return s * perp(x);
}

// Full kernel gradient -x/|x|^2 - F(x), used by the particle dynamics.
inline Complex grad_w_general(Complex x, const GeneralAnisotropy& g) {
  const double n2 = std::norm(x);
  if (n2 == 0.0) throw std::domain_error("grad_w_general: gradient undefined at 0");
  return -x / n2 - force_general(x, g);
}

// Fourier-side weight ((1-alpha) xi1^2 + (1+alpha) xi2^2)/|xi|^4, the
// convexity witness: nonnegative for all xi != 0 iff |alpha| <= 1. The
// 1/(2 pi) normalization of the transform is omitted from the return value.
inline double fourier_weight(Complex xi, Anisotropy a) {
  const double n2 = std::norm(xi);
  if (n2 == 0.0) throw std::domain_error("fourier_weight: undefined at 0");
  const double x1 = xi.real(), x2 = xi.imag();
  return ((1.0 - a.alpha) * x1 * x1 + (1.0 + a.alpha) * x2 * x2) / (n2 * n2);
}

}  // namespace ellipselaw
