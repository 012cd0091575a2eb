#pragma once

#include <cstdint>

#include "ellipselaw/ellipse.hpp"
#include "ellipselaw/kernel.hpp"

namespace ellipselaw {

// Brute-force evaluation of the convolution and energy integrals, independent
// of the closed forms it is used to validate.

struct QuadratureConfig {
  int radial_nodes = 128;
  int angular_nodes = 256;
  long long mc_samples = 1'000'000;
  std::uint64_t rng_seed = 20250810;
  int max_refinements = 5;
};

enum class ConvKernel { Log, Cauchy, ConjCauchy, ZOverZbar2, WAlpha, GradWAlpha };

// Result of a refining quadrature. `last_delta` is the change produced by the
// final node doubling; converged means that change met the tolerance.
struct ConvResult {
  Complex value{0.0, 0.0};
  double last_delta = 0.0;
  bool converged = false;
  int refinements = 0;
};

// Integrates kernel(z - xi) against mu_{a,b} = chi_{Omega(a,b)}/(pi a b):
//  - z outside Omega: tensor midpoint rule on the disk-mapped domain
//    xi = (a r cos phi, b r sin phi);
//  - z inside (or on) Omega: the rule is recentred at z in polar coordinates
//    so the polar Jacobian absorbs the log and 1/|.| singularities.
// Node counts double until two successive evaluations agree to tol (relative
// above 1, absolute below); if max_refinements is exhausted the last value is
// returned with converged = false.
//
// Kernel values: Log -> -log|.|, Cauchy -> 1/., ConjCauchy -> 1/conj(.),
// ZOverZbar2 -> -./conj(.)^2, WAlpha and GradWAlpha the interaction kernel and
// its gradient. Real kernels return with zero imaginary part. Convolutions
// against plain chi_{Omega(a,b)} are pi*a*b times the returned value.
ConvResult conv_oracle(ConvKernel kernel, Complex z, const EllipseDomain& e,
                       Anisotropy alpha, const QuadratureConfig& cfg,
                       double tol = 1e-6);

struct EnergyEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

// Monte Carlo estimate of the energy of mu_{a,b}:
//   (1/2) E[W_alpha(X - Y)] + (1/2) E[|X|^2],  X, Y iid uniform on Omega(a,b),
// with per-pair variance driving the standard error. Coincident pairs are
// resampled. Fixed-order accumulation: bit-reproducible for a fixed seed.
EnergyEstimate energy_oracle(const EllipseDomain& e, Anisotropy alpha,
                             const QuadratureConfig& cfg);

}  // namespace ellipselaw
