#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "ellipselaw/complex_core.hpp"
#include "ellipselaw/rng.hpp"
#include "oracles.hpp"

using ellipselaw::branch_sqrt;
using ellipselaw::Complex;
using ellipselaw::h_func;
using ellipselaw::h_prime;

namespace {

// Off-cut sample points spread over all quadrants and both axes.
std::vector<Complex> sample_points(double c2, int n, std::uint64_t seed) {
  ellipselaw::Rng rng(seed);
  std::vector<Complex> pts;
  const double cut = std::sqrt(c2);
  while (static_cast<int>(pts.size()) < n) {
    Complex z{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    if (z.real() == 0.0 && std::abs(z.imag()) <= cut) continue;
    if (std::abs(z) < 1e-3) continue;
    pts.push_back(z);
  }
  // Axis cases are the sign-tie cases; include them explicitly.
  pts.push_back({3.0, 0.0});
  pts.push_back({-3.0, 0.0});
  pts.push_back({0.0, cut + 1.0});
  pts.push_back({0.0, -cut - 1.0});
  return pts;
}

}  // namespace

TEST_CASE("branch_sqrt on the real axis") {
  CHECK(branch_sqrt({3.0, 0.0}, 0.0).real() == doctest::Approx(3.0));
  CHECK(branch_sqrt({3.0, 0.0}, 0.0).imag() == 0.0);
  // Re(w) must share the sign of Re(z); |w| = sqrt(4 + 5).
  CHECK(branch_sqrt({-2.0, 0.0}, 5.0).real() == doctest::Approx(-3.0));
  CHECK(branch_sqrt({-2.0, 0.0}, 5.0).imag() == 0.0);
}

TEST_CASE("branch_sqrt against the polar-form oracle") {
  const Complex z{1.0, 1.0};
  const Complex w = branch_sqrt(z, 2.0);
  const Complex expected = oracles::polar_branch_sqrt(z, 2.0);
  CHECK(std::abs(w - expected) < 1e-14);
  CHECK(std::abs(w * w - (z * z + 2.0)) < 1e-14);
}

TEST_CASE("branch_sqrt root identity and quadrant preservation") {
  for (double c2 : {0.0, 0.5, 2.0, 10.0}) {
    for (const Complex& z : sample_points(c2, 200, 7)) {
      const Complex w = branch_sqrt(z, c2);
      const double scale = std::max(1.0, std::norm(z) + c2);
      CHECK(std::abs(w * w - (z * z + c2)) <= 1e-13 * scale);
      CHECK(z.real() * w.real() >= 0.0);
      CHECK(z.imag() * w.imag() >= 0.0);
      CHECK(std::abs(w - oracles::polar_branch_sqrt(z, c2)) <= 1e-13 * std::abs(w));
    }
  }
}

TEST_CASE("branch_sqrt conjugation symmetry") {
  for (double c2 : {0.0, 2.0}) {
    for (const Complex& z : sample_points(c2, 100, 11)) {
      const Complex w = branch_sqrt(z, c2);
      const Complex wc = branch_sqrt(std::conj(z), c2);
      CHECK(wc.real() == w.real());
      CHECK(wc.imag() == -w.imag());
    }
  }
}

TEST_CASE("branch_sqrt asymptotics w ~ z") {
  for (const Complex& z : {Complex{1e6, 2e6}, Complex{-3e6, 1e6}, Complex{-1e6, -1e6}}) {
    CHECK(std::abs(branch_sqrt(z, 2.0) / z - 1.0) < 1e-10);
  }
}

TEST_CASE("branch_sqrt cut handling") {
  CHECK_THROWS_AS(branch_sqrt({0.0, 0.5}, 1.0), std::domain_error);
  CHECK_THROWS_AS(branch_sqrt({0.0, -0.99}, 1.0), std::domain_error);
  CHECK_THROWS_AS(branch_sqrt({0.0, 0.0}, 1.0), std::domain_error);
  // Endpoints are accepted and map to zero.
  CHECK(std::abs(branch_sqrt({0.0, 1.0}, 1.0)) < 1e-15);
  CHECK(std::abs(branch_sqrt({0.0, -1.0}, 1.0)) < 1e-15);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(branch_sqrt({nan, 0.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(branch_sqrt({1.0, 0.0}, -1.0), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(branch_sqrt({1.0, inf}, 1.0), std::invalid_argument);
}

TEST_CASE("h_func disk case is 1/(2z)") {
  const Complex z{1.0, 2.0};
  const Complex h = h_func(z, 0.0);
  CHECK(h.real() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(h.imag() == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("h_func real-axis value and range") {
  // 1/(10 + sqrt(102)) by direct real arithmetic.
  const double expected = 1.0 / (10.0 + std::sqrt(102.0));
  const Complex h = h_func({10.0, 0.0}, 2.0);
  CHECK(h.imag() == 0.0);
  CHECK(h.real() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(h.real() > 0.0);
  CHECK(h.real() < 1.0 / 20.0);
}

TEST_CASE("h_func agrees with the algebraic alternate (sqrt(z^2+c^2)-z)/c^2") {
  for (double c2 : {0.5, 2.0, 10.0}) {
    for (const Complex& z : sample_points(c2, 150, 13)) {
      const Complex primary = h_func(z, c2);
      const Complex alternate = (branch_sqrt(z, c2) - z) / c2;
      CHECK(std::abs(primary - alternate) <= 1e-12 * std::abs(primary));
    }
  }
}

TEST_CASE("h_prime disk case and finite differences") {
  // c2 = 0: h'(z) = -1/(2 z^2), so h'(1) = -1/2.
  const Complex hp1 = h_prime({1.0, 0.0}, 0.0);
  CHECK(hp1.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(std::abs(hp1.imag()) < 1e-15);

  const Complex hp10 = h_prime({10.0, 0.0}, 2.0);
  CHECK(hp10.imag() == 0.0);
  CHECK(hp10.real() < 0.0);
  const Complex fd = oracles::central_derivative(
      [](Complex z) { return h_func(z, 2.0); }, {10.0, 0.0}, 1e-6);
  CHECK(std::abs(hp10 - fd) < 1e-8);
}

TEST_CASE("h asymptotics: z^2 h'(z) -> -1/2") {
  for (double c2 : {0.0, 2.0}) {
    const Complex z{3e5, -4e5};
    CHECK(std::abs(z * z * h_prime(z, c2) + 0.5) < 1e-9);
  }
}
