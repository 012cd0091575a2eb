#pragma once

#include <utility>

#include "ellipselaw/closed_form.hpp"
#include "ellipselaw/kernel.hpp"

namespace ellipselaw {

// Rotation reduction of the general anisotropy
//   V(x) = (alpha x1^2 + beta x2^2 + gamma x1 x2)/|x|^2
// to the canonical single-parameter form: with y = rotation * x,
//   V(x) = effective_strength * y1^2/|y|^2 + additive_constant.
// The minimizer support lies on the line y1 = 0 (an ellipse with major axis
// there for strength < 1, the semicircle law on it for strength >= 1).

struct Mat2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

  Complex apply(Complex x) const {
    return {m00 * x.real() + m01 * x.imag(), m10 * x.real() + m11 * x.imag()};
  }
  double det() const { return m00 * m11 - m01 * m10; }
};

struct ReductionResult {
  Mat2 rotation;                   // y = rotation * x, orthogonal, det +1
  double effective_strength = 0.0; // sqrt((beta-alpha)^2 + gamma^2) for gamma != 0
  double additive_constant = 0.0;
  MinimizerRegime predicted_regime = MinimizerRegime::Ellipse;  // or Semicircle
  Complex support_axis{0.0, 1.0};  // unit direction of the line y1 = 0
};

ReductionResult reduce(const GeneralAnisotropy& g);

// Unit directions of the two orthogonal lines where the anisotropic force
// vanishes, x2 = ((beta - alpha) -+ sqrt((beta-alpha)^2 + gamma^2)) x1 / gamma.
// The first returned direction spans the attracting line y1 = 0 (equal to
// reduce(g).support_axis); requires gamma != 0.
std::pair<Complex, Complex> force_zero_lines(const GeneralAnisotropy& g);

}  // namespace ellipselaw
