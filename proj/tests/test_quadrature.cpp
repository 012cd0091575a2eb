#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ellipselaw/closed_form.hpp"
#include "ellipselaw/quadrature.hpp"
#include "ellipselaw/rng.hpp"

using namespace ellipselaw;

namespace {
const EllipseDomain kDisk{1.0, 1.0};
const EllipseDomain kTall{0.8, 1.2};
}  // namespace

TEST_CASE("input validation") {
  QuadratureConfig cfg;
  cfg.radial_nodes = 8;
  CHECK_THROWS_AS(conv_oracle(ConvKernel::Log, {2.0, 0.0}, kDisk, 0.0, cfg),
                  std::invalid_argument);
  QuadratureConfig cfg2;
  cfg2.mc_samples = 0;
  CHECK_THROWS_AS(energy_oracle(kDisk, 0.0, cfg2), std::invalid_argument);
}

TEST_CASE("odd kernel symmetry: Cauchy at the disk center") {
  QuadratureConfig cfg;
  const ConvResult r = conv_oracle(ConvKernel::Cauchy, {0.0, 0.0}, kDisk, 0.0, cfg, 1e-6);
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-6);
}

TEST_CASE("log kernel at the disk center") {
  QuadratureConfig cfg;
  const ConvResult r = conv_oracle(ConvKernel::Log, {0.0, 0.0}, kDisk, 0.0, cfg, 1e-6);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(std::abs(r.value.imag()) < 1e-12);
}

TEST_CASE("w_alpha kernel matches the closed-form potential") {
  QuadratureConfig cfg;
  const Complex z{2.0, -1.0};
  const ConvResult r = conv_oracle(ConvKernel::WAlpha, z, kTall, 0.3, cfg, 1e-6);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx(potential(z, kTall, 0.3)).epsilon(1e-4));
}

TEST_CASE("refinement halves the discrepancy at a smooth exterior point") {
  const Complex z{2.5, 1.5};
  const double exact = potential(z, kTall, 0.4);
  QuadratureConfig coarse;
  coarse.radial_nodes = 24;
  coarse.angular_nodes = 24;
  coarse.max_refinements = 0;
  QuadratureConfig fine = coarse;
  fine.radial_nodes = 48;
  fine.angular_nodes = 48;
  const double err_coarse =
      std::abs(conv_oracle(ConvKernel::WAlpha, z, kTall, 0.4, coarse, 0.0).value.real() -
               exact);
  const double err_fine =
      std::abs(conv_oracle(ConvKernel::WAlpha, z, kTall, 0.4, fine, 0.0).value.real() -
               exact);
  CHECK(err_fine * 2.0 <= err_coarse);
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureConfig cfg;
  cfg.radial_nodes = 16;
  cfg.angular_nodes = 16;
  cfg.max_refinements = 1;
  const ConvResult r =
      conv_oracle(ConvKernel::WAlpha, {0.85, 0.0}, kTall, 0.5, cfg, 1e-12);
  CHECK_FALSE(r.converged);
  CHECK(r.last_delta > 1e-12);
}

TEST_CASE("energy oracle: known disk value") {
  QuadratureConfig cfg;
  cfg.mc_samples = 1'000'000;
  cfg.rng_seed = 7;
  const EnergyEstimate est = energy_oracle(kDisk, 0.0, cfg);
  CHECK(est.std_error > 0.0);
  CHECK(std::abs(est.value - 0.375) <= 3.0 * est.std_error);
}

TEST_CASE("energy oracle: minimizer value at alpha = 0.5") {
  QuadratureConfig cfg;
  cfg.mc_samples = 1'000'000;
  cfg.rng_seed = 11;
  const EllipseDomain e(std::sqrt(0.5), std::sqrt(1.5));
  const EnergyEstimate est = energy_oracle(e, 0.5, cfg);
  CHECK(std::abs(est.value - min_energy(0.5)) <= 3.0 * est.std_error);
}

TEST_CASE("seeded Monte Carlo is bit-reproducible") {
  QuadratureConfig cfg;
  cfg.mc_samples = 50'000;
  cfg.rng_seed = 1234;
  const EnergyEstimate a = energy_oracle(kTall, 0.5, cfg);
  const EnergyEstimate b = energy_oracle(kTall, 0.5, cfg);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("ellipse sampler moments: E[X1^2] = a^2/4, E[X2^2] = b^2/4") {
  Rng rng(2024);
  const long long n = 100'000;
  double s11 = 0.0, s22 = 0.0, s12 = 0.0, q11 = 0.0, q22 = 0.0;
  for (long long i = 0; i < n; ++i) {
    const Complex x = sample_uniform_ellipse(rng, kTall);
    const double a = x.real() * x.real(), b = x.imag() * x.imag();
    s11 += a;
    s22 += b;
    s12 += x.real() * x.imag();
    q11 += a * a;
    q22 += b * b;
  }
  const double m11 = s11 / n, m22 = s22 / n, m12 = s12 / n;
  const double se11 = std::sqrt((q11 / n - m11 * m11) / n);
  const double se22 = std::sqrt((q22 / n - m22 * m22) / n);
  CHECK(std::abs(m11 - 0.16) <= 3.0 * se11);
  CHECK(std::abs(m22 - 0.36) <= 3.0 * se22);
  CHECK(std::abs(m12) <= 0.01);
}
