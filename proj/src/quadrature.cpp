#include "ellipselaw/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ellipselaw/rng.hpp"

namespace ellipselaw {

namespace {

Complex kernel_eval(ConvKernel k, Complex zeta, Anisotropy alpha) {
  switch (k) {
    case ConvKernel::Log:
      return {-0.5 * std::log(std::norm(zeta)), 0.0};
    case ConvKernel::Cauchy:
      return 1.0 / zeta;
    case ConvKernel::ConjCauchy:
      return 1.0 / std::conj(zeta);
    case ConvKernel::ZOverZbar2: {
      const Complex c = std::conj(zeta);
      return -zeta / (c * c);
    }
    case ConvKernel::WAlpha:
      return {w_alpha(zeta, alpha), 0.0};
    case ConvKernel::GradWAlpha:
      return grad_w_alpha(zeta, alpha);
  }
  throw std::invalid_argument("conv_oracle: unknown kernel");
}

// Exterior rule: (1/pi) sum f(z - xi) r dr dphi over the unit-disk image.
Complex integrate_mapped(ConvKernel k, Complex z, const EllipseDomain& e,
                         Anisotropy alpha, int nr, int nphi) {
  const double dr = 1.0 / nr;
  const double dphi = 2.0 * M_PI / nphi;
  Complex total{0.0, 0.0};
  for (int i = 0; i < nr; ++i) {
    const double r = (i + 0.5) * dr;
    Complex ring{0.0, 0.0};
    for (int j = 0; j < nphi; ++j) {
      const double phi = (j + 0.5) * dphi;
      const Complex xi{e.a() * r * std::cos(phi), e.b() * r * std::sin(phi)};
      ring += kernel_eval(k, z - xi, alpha);
    }
    total += ring * r;
  }
  return total * (dr * dphi / M_PI);
}

// Interior rule, recentred at z: xi = z + rho e^{i psi}, rho in (0, R(psi)),
// R(psi) the ray-boundary distance from the conic quadratic. The rho Jacobian
// cancels the kernel singularity at rho = 0.
Complex integrate_recentred(ConvKernel k, Complex z, const EllipseDomain& e,
                            Anisotropy alpha, int nr, int npsi) {
  const double a2 = e.a() * e.a(), b2 = e.b() * e.b();
  const double dpsi = 2.0 * M_PI / npsi;
  const double qc = e.quadratic(z) - 1.0;  // <= 0 inside
  Complex total{0.0, 0.0};
  for (int j = 0; j < npsi; ++j) {
    const double psi = (j + 0.5) * dpsi;
    const double cp = std::cos(psi), sp = std::sin(psi);
    const double qa = cp * cp / a2 + sp * sp / b2;
    const double qb = 2.0 * (z.real() * cp / a2 + z.imag() * sp / b2);
    const double disc = qb * qb - 4.0 * qa * qc;
    const double rmax =
        std::max(0.0, (-qb + std::sqrt(std::max(0.0, disc))) / (2.0 * qa));
    if (rmax == 0.0) continue;
    const double drho = rmax / nr;
    const Complex dir{cp, sp};
    Complex ray{0.0, 0.0};
    for (int i = 0; i < nr; ++i) {
      const double rho = (i + 0.5) * drho;
      ray += kernel_eval(k, -rho * dir, alpha) * rho;
    }
    total += ray * drho;
  }
  return total * (dpsi / (M_PI * e.a() * e.b()));
}

}  // namespace

ConvResult conv_oracle(ConvKernel kernel, Complex z, const EllipseDomain& e,
                       Anisotropy alpha, const QuadratureConfig& cfg, double tol) {
  if (cfg.radial_nodes < 16 || cfg.angular_nodes < 16) {
    throw std::invalid_argument("conv_oracle: node counts must be >= 16");
  }
  const bool recentre = e.classify(z) != Region::Outside;
  const auto evaluate = [&](int nr, int nphi) {
    return recentre ? integrate_recentred(kernel, z, e, alpha, nr, nphi)
                    : integrate_mapped(kernel, z, e, alpha, nr, nphi);
  };

  int nr = cfg.radial_nodes, nphi = cfg.angular_nodes;
  Complex prev = evaluate(nr, nphi);
  double delta = 0.0;
  for (int it = 1; it <= cfg.max_refinements; ++it) {
    nr *= 2;
    nphi *= 2;
    const Complex cur = evaluate(nr, nphi);
    delta = std::abs(cur - prev);
    if (delta <= tol * std::max(1.0, std::abs(cur))) {
      return {cur, delta, true, it};
    }
    prev = cur;
  }
  return {prev, delta, false, cfg.max_refinements};
}

EnergyEstimate energy_oracle(const EllipseDomain& e, Anisotropy alpha,
                             const QuadratureConfig& cfg) {
  if (cfg.mc_samples < 1) {
    throw std::invalid_argument("energy_oracle: mc_samples must be positive");
  }
  Rng rng(cfg.rng_seed);
  const long long n = cfg.mc_samples;
  double sum = 0.0, sumsq = 0.0;
  for (long long i = 0; i < n; ++i) {
    Complex x = sample_uniform_ellipse(rng, e);
    Complex y = sample_uniform_ellipse(rng, e);
    while (x == y) y = sample_uniform_ellipse(rng, e);
    const double v =
        0.5 * w_alpha(x - y, alpha) + 0.25 * (std::norm(x) + std::norm(y));
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / static_cast<double>(n);
  const double var =
      std::max(0.0, sumsq / static_cast<double>(n) - mean * mean);
  const double se = n > 1 ? std::sqrt(var / static_cast<double>(n - 1)) : 0.0;
  return {mean, se, n};
}

}  // namespace ellipselaw
