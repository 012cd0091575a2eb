#include "ellipselaw/closed_form.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ellipselaw {

namespace {

Complex swap_xy(Complex z) { return {z.imag(), z.real()}; }

void require_tall(const EllipseDomain& e, const char* who) {
  if (e.a() > e.b()) {
    throw std::domain_error(std::string(who) +
                            ": requires b >= a (see allow_swap where available)");
  }
}

EllipseDomain swapped(const EllipseDomain& e) { return {e.b(), e.a()}; }

void require_unit_interval(Anisotropy alpha, const char* who) {
  if (!(alpha.alpha >= 0.0 && alpha.alpha < 1.0)) {
    throw std::domain_error(std::string(who) + ": alpha must lie in [0, 1)");
  }
}

}  // namespace

Complex cauchy_transform(Complex z, const EllipseDomain& e) {
  require_tall(e, "cauchy_transform");
  if (e.classify(z) != Region::Outside) {
    return std::conj(z) - e.lambda() * z;
  }
  return 2.0 * e.a() * e.b() * h_func(z, e);
}

Complex conv_conj(Complex z, const EllipseDomain& e) {
  require_tall(e, "conv_conj");
  if (e.classify(z) != Region::Outside) {
    return z - e.lambda() * std::conj(z);
  }
  return 2.0 * e.a() * e.b() * h_func(std::conj(z), e);
}

Complex conv_z_over_zbar2(Complex z, const EllipseDomain& e) {
  require_tall(e, "conv_z_over_zbar2");
  const double lam = e.lambda();
  if (e.classify(z) != Region::Outside) {
    return lam * lam * std::conj(z) - lam * z;
  }
  const double ab = e.a() * e.b();
  const Complex zb = std::conj(z);
  const Complex hzb = h_func(zb, e);
  return 2.0 * ab * (z - lam * zb - 2.0 * ab * hzb) * h_prime(zb, e) -
         2.0 * ab * lam * hzb;
}

Complex grad_interior_form(Complex z, const EllipseDomain& e, Anisotropy alpha) {
  const double ab = e.a() * e.b();
  const double lam = e.lambda();
  const double al = alpha.alpha;
  return ((-1.0 - al * lam) / ab) * z +
         ((lam + 0.5 * al + 0.5 * al * lam * lam) / ab) * std::conj(z);
}

Complex grad_exterior_form(Complex z, const EllipseDomain& e, Anisotropy alpha) {
  const double ab = e.a() * e.b();
  const double lam = e.lambda();
  const double al = alpha.alpha;
  const Complex zb = std::conj(z);
  const Complex hzb = h_func(zb, e);
  return -(2.0 + al * lam) * hzb + al * h_func(z, e) -
         al * (lam * zb - z + 2.0 * ab * hzb) * h_prime(zb, e);
}

Complex grad_potential(Complex z, const EllipseDomain& e, Anisotropy alpha,
                       bool allow_swap) {
  if (e.a() > e.b()) {
    if (!allow_swap) require_tall(e, "grad_potential");
    return swap_xy(grad_potential(swap_xy(z), swapped(e), -alpha.alpha));
  }
  if (e.classify(z) != Region::Outside) {
    return grad_interior_form(z, e, alpha);
  }
  return grad_exterior_form(z, e, alpha);
}

double log_potential_interior_form(Complex z, const EllipseDomain& e) {
  const double a = e.a(), b = e.b();
  const double x1 = z.real(), x2 = z.imag();
  return -(b * x1 * x1 + a * x2 * x2) / (a * b * (a + b)) -
         std::log(0.5 * (a + b)) + 0.5;
}

// H(z) for the exterior stream function. The textbook c^2 > 0 expression
// -(1/c^2) Re(z sqrt(z^2+c^2) - z^2) - log|sqrt(z^2+c^2) + z| + log 2 + 1/2
// is evaluated through z sqrt(z^2+c^2) - z^2 = c^2 z h(z), which stays
// well-conditioned down to c^2 = 0 and reduces there to -log|z|.
double log_potential_exterior_form(Complex z, const EllipseDomain& e) {
  if (e.c2() == 0.0) return -std::log(std::abs(z));
  const Complex w = branch_sqrt(z, e.c2());
  return -std::real(z * h_func(z, e)) - std::log(std::abs(w + z)) +
         std::log(2.0) + 0.5;
}

double log_potential(Complex z, const EllipseDomain& e, bool allow_swap) {
  if (e.a() > e.b()) {
    if (!allow_swap) require_tall(e, "log_potential");
    return log_potential(swap_xy(z), swapped(e));
  }
  if (e.classify(z) != Region::Outside) {
    return log_potential_interior_form(z, e);
  }
  return log_potential_exterior_form(z, e);
}

double potential_interior_form(Complex z, const EllipseDomain& e, Anisotropy alpha) {
  const double a = e.a(), b = e.b();
  const double al = alpha.alpha;
  const double s = a + b;
  const double x1 = z.real(), x2 = z.imag();
  return (-a - b + al * b) / (a * s * s) * x1 * x1 -
         (a + b + al * a) / (b * s * s) * x2 * x2 - std::log(0.5 * s) + 0.5 +
         al * a / s;
}

double potential_exterior_form(Complex z, const EllipseDomain& e, Anisotropy alpha) {
  const double a = e.a(), b = e.b();
  const double al = alpha.alpha;
  const Complex zb = std::conj(z);
  const Complex hzb = h_func(zb, e);
  const double aniso = std::real(h_func(z, e) * zb - a * b * hzb * hzb -
                                 e.lambda() * hzb * zb);
  return log_potential_exterior_form(z, e) + al * aniso + al * a / (a + b);
}

double potential(Complex z, const EllipseDomain& e, Anisotropy alpha,
                 bool allow_swap) {
  if (e.a() > e.b()) {
    if (!allow_swap) require_tall(e, "potential");
    return potential(swap_xy(z), swapped(e), -alpha.alpha) + alpha.alpha;
  }
  if (e.classify(z) != Region::Outside) {
    return potential_interior_form(z, e, alpha);
  }
  return potential_exterior_form(z, e, alpha);
}

double c_alpha(Anisotropy alpha) {
  require_unit_interval(alpha, "c_alpha");
  const double al = alpha.alpha;
  const double sm = std::sqrt(1.0 - al), sp = std::sqrt(1.0 + al);
  return 0.5 - std::log(0.5 * (sm + sp)) + al * sm / (sm + sp);
}

double ellipse_energy(const EllipseDomain& e, Anisotropy alpha, bool allow_swap) {
  if (e.a() > e.b()) {
    if (!allow_swap) require_tall(e, "ellipse_energy");
    return ellipse_energy(swapped(e), -alpha.alpha) + 0.5 * alpha.alpha;
  }
  const double a = e.a(), b = e.b();
  const double al = alpha.alpha;
  const double s = a + b;
  const double coef1 = (-a - b + al * b) / (a * s * s);
  const double coef2 = -(a + b + al * a) / (b * s * s);
  return 0.5 * (1.0 + coef1) * (a * a / 4.0) + 0.5 * (1.0 + coef2) * (b * b / 4.0) -
         0.5 * std::log(0.5 * s) + 0.25 + 0.5 * al * a / s;
}

double min_energy(Anisotropy alpha) {
  require_unit_interval(alpha, "min_energy");
  const double al = alpha.alpha;
  const double sm = std::sqrt(1.0 - al), sp = std::sqrt(1.0 + al);
  return 0.375 - 0.5 * std::log(0.5 * (sm + sp)) + 0.5 * al * sm / (sm + sp);
}

MinimizerDescriptor minimizer(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("minimizer: alpha must be finite");
  }
  if (alpha >= 1.0) {
    return {MinimizerRegime::Semicircle, std::nullopt, Complex{0.0, 1.0}};
  }
  if (alpha <= -1.0) {
    return {MinimizerRegime::SwappedSemicircle, std::nullopt, Complex{1.0, 0.0}};
  }
  const EllipseDomain e(std::sqrt(1.0 - alpha), std::sqrt(1.0 + alpha));
  if (alpha >= 0.0) {
    return {MinimizerRegime::Ellipse, e, std::nullopt};
  }
  return {MinimizerRegime::SwappedEllipse, e, std::nullopt};
}

double foci_level(Complex z, const EllipseDomain& e) {
  require_tall(e, "foci_level");
  const Complex z2 = z * z;
  return std::abs(z2) + std::abs(z2 + e.c2()) - (e.a() * e.a() + e.b() * e.b());
}

double el2_integrand(Complex z, Anisotropy alpha) {
  const double al = alpha.alpha;
  if (!(al > 0.0 && al < 1.0)) {
    throw std::domain_error("el2_integrand: alpha must lie in (0, 1)");
  }
  const EllipseDomain e(std::sqrt(1.0 - al), std::sqrt(1.0 + al));
  if (e.classify(z) == Region::Inside) {
    throw std::domain_error("el2_integrand: point inside the minimizer support");
  }
  const double c2 = 2.0 * al;
  const Complex z2 = z * z;
  const double mod = std::abs(z2 + c2);
  const double factor = (mod + std::abs(z2) - 2.0) / (2.0 * mod);
  return factor * std::real(std::conj(z) * branch_sqrt(z, c2));
}

}  // namespace ellipselaw
