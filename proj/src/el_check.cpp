#include "ellipselaw/el_check.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ellipselaw {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return xs;
}

EllipseDomain support_of(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::domain_error("el check: alpha must lie in [0, 1)");
  }
  return {std::sqrt(1.0 - alpha), std::sqrt(1.0 + alpha)};
}

}  // namespace

ResidualReport check_el1(double alpha, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("check_el1: resolution must be >= 2");
  }
  const EllipseDomain e = support_of(alpha);
  const double c = c_alpha(alpha);

  ResidualReport r;
  r.alpha = alpha;
  r.grid = {std::max(e.a(), e.b()), resolution};
  r.min_exterior_margin = std::numeric_limits<double>::infinity();
  r.min_radial_margin = std::numeric_limits<double>::infinity();
  r.min_integrand = std::numeric_limits<double>::infinity();

  const auto xs = linspace(-e.a(), e.a(), resolution);
  const auto ys = linspace(-e.b(), e.b(), resolution);
  for (double y : ys) {
    for (double x : xs) {
      const Complex z{x, y};
      if (e.classify(z) != Region::Inside) continue;
      ++r.interior_points;
      const double rv = std::abs(potential(z, e, alpha) + 0.5 * std::norm(z) - c);
      if (rv > r.max_abs_interior_residual) {
        r.max_abs_interior_residual = rv;
        r.argmax_location = z;
      }
      const double rg = std::abs(grad_potential(z, e, alpha) + z);
      if (rg > r.max_abs_gradient_residual) {
        r.max_abs_gradient_residual = rg;
        r.argmax_gradient_location = z;
      }
    }
  }
  return r;
}

ResidualReport check_el2(double alpha, double extent, int resolution) {
  if (resolution < 2) {
    throw std::invalid_argument("check_el2: resolution must be >= 2");
  }
  if (!(extent > 0.0)) {
    throw std::invalid_argument("check_el2: extent must be positive");
  }
  const EllipseDomain e = support_of(alpha);
  const double c = c_alpha(alpha);

  ResidualReport r;
  r.alpha = alpha;
  r.grid = {extent, resolution};
  r.min_exterior_margin = std::numeric_limits<double>::infinity();
  r.min_radial_margin = std::numeric_limits<double>::infinity();
  r.min_integrand = std::numeric_limits<double>::infinity();

  const auto xs = linspace(-extent, extent, resolution);
  for (double y : xs) {
    for (double x : xs) {
      const Complex z{x, y};
      if (e.classify(z) != Region::Outside) continue;
      ++r.exterior_points;
      const double margin = potential(z, e, alpha) + 0.5 * std::norm(z) - c;
      if (margin < r.min_exterior_margin) {
        r.min_exterior_margin = margin;
        r.argmin_location = z;
      }
      const double radial =
          std::real(std::conj(z) * grad_potential(z, e, alpha)) + std::norm(z);
      if (radial < r.min_radial_margin) {
        r.min_radial_margin = radial;
        r.argmin_radial_location = z;
      }
      if (alpha > 0.0) {
        r.min_integrand = std::min(r.min_integrand, el2_integrand(z, alpha));
      }
    }
  }
  return r;
}

C1Report check_c1(const EllipseDomain& e, double alpha, int n_boundary_samples) {
  if (e.a() > e.b()) {
    throw std::domain_error("check_c1: requires b >= a");
  }
  if (n_boundary_samples < 4) {
    throw std::invalid_argument("check_c1: need at least 4 samples");
  }
  C1Report r;
  r.samples = n_boundary_samples;
  for (int k = 0; k < n_boundary_samples; ++k) {
    const double theta = 2.0 * M_PI * k / n_boundary_samples;
    const Complex z = e.boundary_point(theta);
    const double dv = std::abs(potential_interior_form(z, e, alpha) -
                               potential_exterior_form(z, e, alpha));
    if (dv > r.max_value_mismatch) {
      r.max_value_mismatch = dv;
      r.argmax_value_theta = theta;
    }
    const double dg = std::abs(grad_interior_form(z, e, alpha) -
                               grad_exterior_form(z, e, alpha));
    if (dg > r.max_gradient_mismatch) {
      r.max_gradient_mismatch = dg;
      r.argmax_gradient_theta = theta;
    }
  }
  return r;
}

nlohmann::json to_json(const ResidualReport& r) {
  nlohmann::json j;
  j["alpha"] = r.alpha;
  j["grid"] = {{"extent", r.grid.extent}, {"resolution", r.grid.resolution}};
  if (r.interior_points > 0) {
    j["interior"] = {
        {"points", r.interior_points},
        {"max_abs_residual", r.max_abs_interior_residual},
        {"argmax", {r.argmax_location.real(), r.argmax_location.imag()}},
        {"max_abs_gradient_residual", r.max_abs_gradient_residual},
        {"argmax_gradient",
         {r.argmax_gradient_location.real(), r.argmax_gradient_location.imag()}}};
  }
  if (r.exterior_points > 0) {
    j["exterior"] = {
        {"points", r.exterior_points},
        {"min_margin", r.min_exterior_margin},
        {"argmin", {r.argmin_location.real(), r.argmin_location.imag()}},
        {"min_radial_margin", r.min_radial_margin},
        {"argmin_radial",
         {r.argmin_radial_location.real(), r.argmin_radial_location.imag()}}};
    if (std::isfinite(r.min_integrand)) {
      j["exterior"]["min_integrand"] = r.min_integrand;
    }
  }
  return j;
}

nlohmann::json to_json(const C1Report& r) {
  return {{"samples", r.samples},
          {"max_value_mismatch", r.max_value_mismatch},
          {"argmax_value_theta", r.argmax_value_theta},
          {"max_gradient_mismatch", r.max_gradient_mismatch},
          {"argmax_gradient_theta", r.argmax_gradient_theta}};
}

}  // namespace ellipselaw
