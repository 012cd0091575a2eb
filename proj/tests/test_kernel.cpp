#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "ellipselaw/kernel.hpp"
#include "ellipselaw/rng.hpp"
#include "oracles.hpp"

using namespace ellipselaw;

TEST_CASE("regime tagging") {
  CHECK(Anisotropy(0.0).regime() == Regime::Ellipse);
  CHECK(Anisotropy(0.999).regime() == Regime::Ellipse);
  CHECK(Anisotropy(1.0).regime() == Regime::Wall);
  CHECK(Anisotropy(3.5).regime() == Regime::Wall);
  CHECK(Anisotropy(-0.2).regime() == Regime::Swapped);
}

TEST_CASE("w_alpha point values") {
  CHECK(w_alpha({1.0, 0.0}, 0.7) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(w_alpha({0.0, 1.0}, 0.3) == doctest::Approx(0.0));
  CHECK(w_alpha({1.0, 1.0}, 0.5) ==
        doctest::Approx(-0.5 * std::log(2.0) + 0.25).epsilon(1e-15));
  CHECK(std::isinf(w_alpha({0.0, 0.0}, 0.5)));
  CHECK(w_alpha({0.0, 0.0}, 0.5) > 0.0);
}

TEST_CASE("w_alpha is even") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Complex x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::norm(x) == 0.0) continue;
    CHECK(w_alpha(x, 0.6) == w_alpha(-x, 0.6));
  }
}

TEST_CASE("grad_w_alpha structure") {
  const Complex g = grad_w_alpha({1.0, 0.0}, 0.8);
  CHECK(g.real() == doctest::Approx(-1.0));
  CHECK(g.imag() == doctest::Approx(0.0));

  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Complex x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (std::abs(x) < 0.1) continue;
    const Complex coulomb = grad_w_alpha(x, 0.0);
    CHECK(std::abs(coulomb + x / std::norm(x)) < 1e-15);
  }
  CHECK_THROWS_AS(grad_w_alpha({0.0, 0.0}, 0.5), std::domain_error);
}

TEST_CASE("grad_w_alpha: real and complex routes coincide") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const Complex x{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    if (std::abs(x) < 0.05) continue;
    for (double al : {0.0, 0.4, 1.0, -0.7}) {
      const Complex real_form = grad_w_alpha(x, al);
      const Complex complex_form = grad_w_alpha_complex(x, al);
      CHECK(std::abs(real_form - complex_form) <=
            1e-13 * std::max(1.0, std::abs(real_form)));
    }
  }
}

TEST_CASE("grad_w_alpha matches finite differences of w_alpha") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const double r = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double t = rng.uniform(0.0, 2.0 * M_PI);
    const Complex x{r * std::cos(t), r * std::sin(t)};
    const double al = rng.uniform(-1.0, 1.5);
    const Complex fd = oracles::central_gradient(
        [al](Complex p) { return w_alpha(p, al); }, x, 1e-6);
    CHECK(std::abs(grad_w_alpha(x, al) - fd) < 1e-6);
  }
  // The spec point: anisotropic and Coulomb parts both active.
  const Complex fd = oracles::central_gradient(
      [](Complex p) { return w_alpha(p, 1.0); }, {1.0, 1.0}, 1e-6);
  CHECK(std::abs(grad_w_alpha({1.0, 1.0}, 1.0) - fd) < 1e-8);
}

TEST_CASE("w_general point values and reduction to w_alpha") {
  CHECK(w_general({1.0, 0.0}, {0.4, 0.9, -0.2}) == doctest::Approx(0.4));
  CHECK(w_general({1.0, 1.0}, {0.0, 0.0, 1.0}) ==
        doctest::Approx(-0.5 * std::log(2.0) + 0.5).epsilon(1e-15));
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Complex x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::abs(x) < 0.05) continue;
    CHECK(w_general(x, {0.7, 0.0, 0.0}) ==
          doctest::Approx(w_alpha(x, 0.7)).epsilon(1e-14));
    CHECK(w_general(x, {0.2, 0.5, 0.8}) == w_general(-x, {0.2, 0.5, 0.8}));
  }
}

TEST_CASE("force_general values and zero set") {
  const GeneralAnisotropy shear{0.0, 0.0, 1.0};
  const Complex f = force_general({1.0, 0.0}, shear);
  CHECK(f.real() == doctest::Approx(0.0));
  CHECK(f.imag() == doctest::Approx(-1.0));

  // Isotropic: no force anywhere.
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Complex x{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    if (std::abs(x) < 0.05) continue;
    CHECK(std::abs(force_general(x, {0.6, 0.6, 0.0})) == 0.0);
  }

  // Zero lines x2 = ((beta-alpha) +- sqrt((beta-alpha)^2 + gamma^2)) x1/gamma.
  const GeneralAnisotropy g{0.2, 0.7, 0.4};
  const double d = g.beta - g.alpha;
  const double root = std::hypot(d, g.gamma);
  for (double slope : {(d + root) / g.gamma, (d - root) / g.gamma}) {
    for (double t : {-2.0, 0.5, 3.0}) {
      const Complex x{t, slope * t};
      CHECK(std::abs(force_general(x, g)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(force_general({0.0, 0.0}, g), std::domain_error);
}

TEST_CASE("force_general equals minus the gradient of the anisotropy") {
  const GeneralAnisotropy g{0.3, -0.2, 0.9};
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const Complex x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (std::abs(x) < 0.2) continue;
    // V = W_general - W_0 (the pure log), so -grad V = grad W_0 - grad W_general.
    const Complex fd = oracles::central_gradient(
        [&g](Complex p) { return w_general(p, g) - w_alpha(p, 0.0); }, x, 1e-6);
    CHECK(std::abs(force_general(x, g) + fd) < 1e-6);
  }
}

TEST_CASE("grad_w_general composes Coulomb and anisotropic force") {
  const GeneralAnisotropy g{0.1, 0.4, -0.3};
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const Complex x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (std::abs(x) < 0.2) continue;
    const Complex fd = oracles::central_gradient(
        [&g](Complex p) { return w_general(p, g); }, x, 1e-6);
    CHECK(std::abs(grad_w_general(x, g) - fd) < 1e-6);
    CHECK(std::abs(grad_w_general(x, {0.7, 0.0, 0.0}) - grad_w_alpha(x, 0.7)) <
          1e-14);
  }
}

TEST_CASE("fourier_weight point values") {
  CHECK(fourier_weight({1.0, 0.0}, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fourier_weight({0.0, 2.0}, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(fourier_weight({0.0, 0.0}, 0.5), std::domain_error);
}

TEST_CASE("fourier_weight nonnegative iff |alpha| <= 1") {
  Rng rng(43);
  for (int i = 0; i < 2000; ++i) {
    const Complex xi{rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
    if (std::norm(xi) == 0.0) continue;
    for (double al : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      CHECK(fourier_weight(xi, al) >= 0.0);
    }
  }
  // Beyond the critical weight a negative direction exists near an axis.
  CHECK(fourier_weight({1.0, 0.01}, 1.1) < 0.0);
  CHECK(fourier_weight({0.01, 1.0}, -1.1) < 0.0);
}
