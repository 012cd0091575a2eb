#pragma once

#include <optional>

#include "ellipselaw/ellipse.hpp"
#include "ellipselaw/kernel.hpp"

namespace ellipselaw {

// Closed-form convolutions against the normalized indicator
// mu_{a,b} = chi_{Omega(a,b)} / (pi a b) and against chi_{Omega(a,b)} itself.
//
// All formulas below require b >= a, which puts the branch cut of
// sqrt(z^2 + c^2) on the segment [-ic, ic] strictly inside Omega(a,b). The
// potential/gradient/energy entry points accept a > b when allow_swap is set,
// evaluating through the exact coordinate swap
//   (W_alpha * mu_{a,b})(x1, x2) = (W_{-alpha} * mu_{b,a})(x2, x1) + alpha.

// (1/(pi z)) * chi_{Omega(a,b)}: zbar - lambda z inside, 2ab h(z) outside.
Complex cauchy_transform(Complex z, const EllipseDomain& e);

// (1/(pi zbar)) * chi_{Omega(a,b)}: z - lambda zbar inside, 2ab h(zbar) outside.
Complex conv_conj(Complex z, const EllipseDomain& e);

// -(1/pi) (z/zbar^2) * chi_{Omega(a,b)}: lambda^2 zbar - lambda z inside,
// 2ab (z - lambda zbar - 2ab h(zbar)) h'(zbar) - 2ab lambda h(zbar) outside.
Complex conv_z_over_zbar2(Complex z, const EllipseDomain& e);

// grad(W_alpha * mu_{a,b}) as a vector encoded re + i im.
Complex grad_potential(Complex z, const EllipseDomain& e, Anisotropy alpha,
                       bool allow_swap = false);

// -log|.| * mu_{a,b} (the stream function of the elliptical patch).
double log_potential(Complex z, const EllipseDomain& e, bool allow_swap = false);

// (W_alpha * mu_{a,b})(z) on the whole plane; C^1 across the boundary.
double potential(Complex z, const EllipseDomain& e, Anisotropy alpha,
                 bool allow_swap = false);

// Interior/exterior expressions individually, evaluable on the closed
// boundary from either side; used by the C^1 continuity checks.
double potential_interior_form(Complex z, const EllipseDomain& e, Anisotropy alpha);
double potential_exterior_form(Complex z, const EllipseDomain& e, Anisotropy alpha);
Complex grad_interior_form(Complex z, const EllipseDomain& e, Anisotropy alpha);
Complex grad_exterior_form(Complex z, const EllipseDomain& e, Anisotropy alpha);
double log_potential_interior_form(Complex z, const EllipseDomain& e);
double log_potential_exterior_form(Complex z, const EllipseDomain& e);

// The constant C_alpha = (W_alpha * mu_alpha) + |x|^2/2 on the support of the
// minimizer, 0 <= alpha < 1:
//   1/2 - log((sqrt(1-alpha) + sqrt(1+alpha))/2)
//       + alpha sqrt(1-alpha)/(sqrt(1-alpha) + sqrt(1+alpha)).
double c_alpha(Anisotropy alpha);

// I_alpha(mu_{a,b}), transcribed from the moment expansion with second
// moments a^2/4 and b^2/4.
double ellipse_energy(const EllipseDomain& e, Anisotropy alpha,
                      bool allow_swap = false);

// Minimal energy over all probability measures, 0 <= alpha < 1:
//   3/8 - (1/2) log((sqrt(1-alpha) + sqrt(1+alpha))/2)
//       + (alpha/2) sqrt(1-alpha)/(sqrt(1-alpha) + sqrt(1+alpha)).
// Deliberately an independent transcription, not ellipse_energy at the
// minimizing axes, so the two serve as cross-checks.
double min_energy(Anisotropy alpha);

enum class MinimizerRegime { Ellipse, Semicircle, SwappedEllipse, SwappedSemicircle };

// The unique minimizer of the energy for a given alpha:
//  - 0 <= alpha < 1: uniform measure on Omega(sqrt(1-alpha), sqrt(1+alpha));
//  - alpha >= 1: semicircle law of radius sqrt(2) on the vertical axis;
//  - alpha < 0: the x1 <-> x2 swapped counterparts.
struct MinimizerDescriptor {
  MinimizerRegime regime;
  std::optional<EllipseDomain> ellipse;  // set in the ellipse regimes
  std::optional<Complex> axis;           // unit support direction, singular regimes
};

MinimizerDescriptor minimizer(double alpha);

// |z^2| + |z^2 + c^2| - (a^2 + b^2): zero on the boundary of Omega(a,b),
// nonnegative outside. Requires b >= a.
double foci_level(Complex z, const EllipseDomain& e);

// The exterior sign witness for the second optimality condition,
//   ((|z^2 + 2 alpha| + |z^2| - 2) / (2 |z^2 + 2 alpha|)) Re(zbar sqrt(z^2 + 2 alpha)),
// defined for 0 < alpha < 1 and z outside Omega(sqrt(1-alpha), sqrt(1+alpha)).
double el2_integrand(Complex z, Anisotropy alpha);

}  // namespace ellipselaw
