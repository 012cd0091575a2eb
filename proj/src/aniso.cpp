#include "ellipselaw/aniso.hpp"

#include <cmath>
#include <stdexcept>

namespace ellipselaw {

namespace {

Complex unit(Complex v) { return v / std::abs(v); }

// beta - alpha - sqrt((beta-alpha)^2 + gamma^2), in the cancellation-free form
// -gamma^2 / (beta - alpha + sqrt(...)) when beta >= alpha.
double a_tilde(double d, double gamma) {
  const double root = std::hypot(d, gamma);
  return d >= 0.0 ? -gamma * gamma / (d + root) : d - root;
}

}  // namespace

ReductionResult reduce(const GeneralAnisotropy& g) {
  ReductionResult r;
  if (g.gamma == 0.0) {
    // Already canonical up to swapping the axes.
    r.effective_strength = std::abs(g.alpha - g.beta);
    if (g.alpha >= g.beta) {
      r.rotation = Mat2{1.0, 0.0, 0.0, 1.0};
      r.additive_constant = g.beta;
      r.support_axis = {0.0, 1.0};
    } else {
      r.rotation = Mat2{0.0, 1.0, -1.0, 0.0};
      r.additive_constant = g.alpha;
      r.support_axis = {1.0, 0.0};
    }
  } else {
    const double d = g.beta - g.alpha;
    const double at = a_tilde(d, g.gamma);
    const double n = std::hypot(at, g.gamma);
    r.rotation = Mat2{-at / n, g.gamma / n, -g.gamma / n, -at / n};
    r.effective_strength = std::hypot(d, g.gamma);
    r.additive_constant =
        g.beta - r.effective_strength * g.gamma * g.gamma / (at * at + g.gamma * g.gamma);
    r.support_axis = unit(Complex{g.gamma, at});
  }
  r.predicted_regime = r.effective_strength >= 1.0 ? MinimizerRegime::Semicircle
                                                   : MinimizerRegime::Ellipse;
  return r;
}

std::pair<Complex, Complex> force_zero_lines(const GeneralAnisotropy& g) {
  if (g.gamma == 0.0) {
    throw std::domain_error(
        "force_zero_lines: gamma = 0 is degenerate (the lines are the "
        "coordinate axes; see reduce)");
  }
  const double d = g.beta - g.alpha;
  const double root = std::hypot(d, g.gamma);
  const double lo = a_tilde(d, g.gamma);                          // d - root
  const double hi = d <= 0.0 ? g.gamma * g.gamma / (root - d) : d + root;
  return {unit(Complex{g.gamma, lo}), unit(Complex{g.gamma, hi})};
}

}  // namespace ellipselaw
