#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ellipselaw/ellipse.hpp"

namespace ellipselaw {

// Seeded generator with explicit bit-to-double conversion. std::*_distribution
// is implementation-defined, so sampling goes through uniform() directly to
// keep seeded runs bit-reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller, one spare cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Uniform by area on the closed unit disk.
  Complex in_unit_disk() {
    const double r = std::sqrt(uniform());
    const double t = 2.0 * M_PI * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Uniform by area on Omega(a,b) (linear image of the unit disk).
inline Complex sample_uniform_ellipse(Rng& rng, const EllipseDomain& e) {
  const Complex u = rng.in_unit_disk();
  return {e.a() * u.real(), e.b() * u.imag()};
}

}  // namespace ellipselaw
