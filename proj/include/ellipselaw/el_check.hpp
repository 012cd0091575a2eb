#pragma once

#include "ellipselaw/closed_form.hpp"

#include "json.hpp"

namespace ellipselaw {

// Grid verification of the optimality conditions of the minimizer:
//   inside the support:  grad(W*mu)(z) + z = 0  and  (W*mu)(z) + |z|^2/2 = C;
//   outside:             (W*mu)(z) + |z|^2/2 >= C,
// together with C^1 matching of the interior and exterior expressions on the
// boundary. Grids are capacity-positive samples of continuous closed forms,
// so pointwise checks are the strongest executable statement.

struct GridSpec {
  double extent = 0.0;
  int resolution = 0;
};

struct ResidualReport {
  double alpha = 0.0;
  GridSpec grid;

  // Interior side (first condition).
  double max_abs_interior_residual = 0.0;  // |potential + |z|^2/2 - C_alpha|
  double max_abs_gradient_residual = 0.0;  // |grad_potential + z|
  Complex argmax_location{0.0, 0.0};
  Complex argmax_gradient_location{0.0, 0.0};
  long interior_points = 0;

  // Exterior side (second condition).
  double min_exterior_margin = 0.0;  // min of potential + |z|^2/2 - C_alpha
  Complex argmin_location{0.0, 0.0};
  double min_radial_margin = 0.0;  // min of Re(zbar grad) + |z|^2
  Complex argmin_radial_location{0.0, 0.0};
  double min_integrand = 0.0;  // min of el2_integrand (alpha > 0 only)
  long exterior_points = 0;
};

// Interior grid of the minimizer support, resolution^2 points over its
// bounding box; points in the boundary band are skipped (check_c1 covers the
// boundary itself). Requires 0 <= alpha < 1.
ResidualReport check_el1(double alpha, int resolution);

// Exterior grid, resolution^2 points over [-extent, extent]^2.
ResidualReport check_el2(double alpha, double extent, int resolution);

struct C1Report {
  double max_value_mismatch = 0.0;
  double max_gradient_mismatch = 0.0;
  double argmax_value_theta = 0.0;
  double argmax_gradient_theta = 0.0;
  int samples = 0;
};

// Compares interior- and exterior-form values and gradients at n boundary
// angles theta_k = 2 pi k / n (includes the cut-adjacent co-vertices when
// 4 | n). Requires b >= a.
C1Report check_c1(const EllipseDomain& e, double alpha, int n_boundary_samples);

nlohmann::json to_json(const ResidualReport& r);
nlohmann::json to_json(const C1Report& r);

}  // namespace ellipselaw
