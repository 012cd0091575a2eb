#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellipselaw/aniso.hpp"
#include "ellipselaw/closed_form.hpp"
#include "ellipselaw/el_check.hpp"
#include "ellipselaw/flow.hpp"
#include "ellipselaw/quadrature.hpp"
#include "ellipselaw/version.hpp"

namespace py = pybind11;
using namespace ellipselaw;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anisotropic nonlocal energy toolkit: ellipse-law closed forms, "
            "quadrature oracles, optimality-condition checks and an "
            "interacting-particle gradient flow.";
  m.attr("__version__") = kVersion;

  py::register_exception<CollisionError>(m, "CollisionError");

  py::enum_<Region>(m, "Region")
      .value("inside", Region::Inside)
      .value("boundary", Region::Boundary)
      .value("outside", Region::Outside);

  py::enum_<Regime>(m, "Regime")
      .value("ellipse", Regime::Ellipse)
      .value("wall", Regime::Wall)
      .value("swapped", Regime::Swapped);

  py::enum_<MinimizerRegime>(m, "MinimizerRegime")
      .value("ellipse", MinimizerRegime::Ellipse)
      .value("semicircle", MinimizerRegime::Semicircle)
      .value("swapped_ellipse", MinimizerRegime::SwappedEllipse)
      .value("swapped_semicircle", MinimizerRegime::SwappedSemicircle);

  py::enum_<InitKind>(m, "InitKind")
      .value("uniform_disk", InitKind::UniformDisk)
      .value("gaussian", InitKind::Gaussian);

  py::enum_<ConvKernel>(m, "ConvKernel")
      .value("log", ConvKernel::Log)
      .value("cauchy", ConvKernel::Cauchy)
      .value("conj_cauchy", ConvKernel::ConjCauchy)
      .value("z_over_zbar2", ConvKernel::ZOverZbar2)
      .value("w_alpha", ConvKernel::WAlpha)
      .value("grad_w_alpha", ConvKernel::GradWAlpha);

  // complex_core
  m.def("branch_sqrt", &branch_sqrt, py::arg("z"), py::arg("c2"),
        "Quadrant-preserving root of z^2 + c2, cut on [-i sqrt(c2), i sqrt(c2)].");
  m.def("h_func", py::overload_cast<Complex, double>(&h_func), py::arg("z"),
        py::arg("c2"), "1/(z + branch_sqrt(z, c2))");
  m.def("h_prime", py::overload_cast<Complex, double>(&h_prime), py::arg("z"),
        py::arg("c2"));
  m.def("perp", &perp, py::arg("z"), "x_perp = (x2, -x1)");

  // kernel
  py::class_<GeneralAnisotropy>(m, "GeneralAnisotropy")
      .def(py::init<double, double, double>(), py::arg("alpha") = 0.0,
           py::arg("beta") = 0.0, py::arg("gamma") = 0.0)
      .def_readwrite("alpha", &GeneralAnisotropy::alpha)
      .def_readwrite("beta", &GeneralAnisotropy::beta)
      .def_readwrite("gamma", &GeneralAnisotropy::gamma)
      .def("__repr__", [](const GeneralAnisotropy& g) {
        return "GeneralAnisotropy(alpha=" + std::to_string(g.alpha) +
               ", beta=" + std::to_string(g.beta) +
               ", gamma=" + std::to_string(g.gamma) + ")";
      });

  m.def("regime", [](double alpha) { return Anisotropy(alpha).regime(); },
        py::arg("alpha"));
  m.def("w_alpha",
        [](Complex x, double alpha) { return w_alpha(x, alpha); },
        py::arg("x"), py::arg("alpha"));
  m.def("grad_w_alpha",
        [](Complex x, double alpha) { return grad_w_alpha(x, alpha); },
        py::arg("x"), py::arg("alpha"));
  m.def("w_general", &w_general, py::arg("x"), py::arg("g"));
  m.def("force_general", &force_general, py::arg("x"), py::arg("g"));
  m.def("grad_w_general", &grad_w_general, py::arg("x"), py::arg("g"));
  m.def("fourier_weight",
        [](Complex xi, double alpha) { return fourier_weight(xi, alpha); },
        py::arg("xi"), py::arg("alpha"));

  // ellipse + closed forms
  py::class_<EllipseDomain>(m, "EllipseDomain")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &EllipseDomain::a)
      .def_property_readonly("b", &EllipseDomain::b)
      .def_property_readonly("lam", &EllipseDomain::lambda)
      .def_property_readonly("c2", &EllipseDomain::c2)
      .def_property_readonly("area", &EllipseDomain::area)
      .def("quadratic", &EllipseDomain::quadratic, py::arg("z"))
      .def("classify", &EllipseDomain::classify, py::arg("z"),
           py::arg("band") = kBoundaryBand)
      .def("boundary_point", &EllipseDomain::boundary_point, py::arg("theta"))
      .def("__repr__", [](const EllipseDomain& e) {
        return "EllipseDomain(a=" + std::to_string(e.a()) +
               ", b=" + std::to_string(e.b()) + ")";
      });

  m.def("cauchy_transform", &cauchy_transform, py::arg("z"), py::arg("e"));
  m.def("conv_conj", &conv_conj, py::arg("z"), py::arg("e"));
  m.def("conv_z_over_zbar2", &conv_z_over_zbar2, py::arg("z"), py::arg("e"));
  m.def("grad_potential",
        [](Complex z, const EllipseDomain& e, double alpha, bool allow_swap) {
          return grad_potential(z, e, alpha, allow_swap);
        },
        py::arg("z"), py::arg("e"), py::arg("alpha"), py::arg("allow_swap") = false);
  m.def("log_potential", &log_potential, py::arg("z"), py::arg("e"),
        py::arg("allow_swap") = false);
  m.def("potential",
        [](Complex z, const EllipseDomain& e, double alpha, bool allow_swap) {
          return potential(z, e, alpha, allow_swap);
        },
        py::arg("z"), py::arg("e"), py::arg("alpha"), py::arg("allow_swap") = false);
  m.def("c_alpha", [](double alpha) { return c_alpha(alpha); }, py::arg("alpha"));
  m.def("ellipse_energy",
        [](const EllipseDomain& e, double alpha, bool allow_swap) {
          return ellipse_energy(e, alpha, allow_swap);
        },
        py::arg("e"), py::arg("alpha"), py::arg("allow_swap") = false);
  m.def("min_energy", [](double alpha) { return min_energy(alpha); },
        py::arg("alpha"));
  m.def("foci_level", &foci_level, py::arg("z"), py::arg("e"));
  m.def("el2_integrand",
        [](Complex z, double alpha) { return el2_integrand(z, alpha); },
        py::arg("z"), py::arg("alpha"));

  py::class_<MinimizerDescriptor>(m, "MinimizerDescriptor")
      .def_readonly("regime", &MinimizerDescriptor::regime)
      .def_readonly("ellipse", &MinimizerDescriptor::ellipse)
      .def_readonly("axis", &MinimizerDescriptor::axis);
  m.def("minimizer", &minimizer, py::arg("alpha"),
        "The unique energy minimizer for a given anisotropy strength.");

  // quadrature oracle
  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("radial_nodes", &QuadratureConfig::radial_nodes)
      .def_readwrite("angular_nodes", &QuadratureConfig::angular_nodes)
      .def_readwrite("mc_samples", &QuadratureConfig::mc_samples)
      .def_readwrite("rng_seed", &QuadratureConfig::rng_seed)
      .def_readwrite("max_refinements", &QuadratureConfig::max_refinements);

  py::class_<ConvResult>(m, "ConvResult")
      .def_readonly("value", &ConvResult::value)
      .def_readonly("last_delta", &ConvResult::last_delta)
      .def_readonly("converged", &ConvResult::converged)
      .def_readonly("refinements", &ConvResult::refinements);

  py::class_<EnergyEstimate>(m, "EnergyEstimate")
      .def_readonly("value", &EnergyEstimate::value)
      .def_readonly("std_error", &EnergyEstimate::std_error)
      .def_readonly("samples", &EnergyEstimate::samples);

  m.def("conv_oracle",
        [](ConvKernel k, Complex z, const EllipseDomain& e, double alpha,
           const QuadratureConfig& cfg, double tol) {
          return conv_oracle(k, z, e, alpha, cfg, tol);
        },
        py::arg("kernel"), py::arg("z"), py::arg("e"), py::arg("alpha"),
        py::arg("cfg") = QuadratureConfig{}, py::arg("tol") = 1e-6);
  m.def("energy_oracle",
        [](const EllipseDomain& e, double alpha, const QuadratureConfig& cfg) {
          return energy_oracle(e, alpha, cfg);
        },
        py::arg("e"), py::arg("alpha"), py::arg("cfg") = QuadratureConfig{});

  // flow
  py::class_<ParticleEnsemble>(m, "ParticleEnsemble")
      .def(py::init<>())
      .def_readwrite("positions", &ParticleEnsemble::positions)
      .def_readwrite("rng_seed", &ParticleEnsemble::rng_seed)
      .def_readwrite("step_count", &ParticleEnsemble::step_count);

  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("n_particles", &SimConfig::n_particles)
      .def_readwrite("dt", &SimConfig::dt)
      .def_readwrite("t_end", &SimConfig::t_end)
      .def_readwrite("interaction", &SimConfig::interaction)
      .def_readwrite("init", &SimConfig::init)
      .def_readwrite("init_radius", &SimConfig::init_radius)
      .def_readwrite("init_sigma", &SimConfig::init_sigma)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("record_every", &SimConfig::record_every)
      .def_readwrite("threads", &SimConfig::threads);

  py::class_<Moments>(m, "Moments")
      .def_readonly("m11", &Moments::m11)
      .def_readonly("m22", &Moments::m22)
      .def_readonly("m12", &Moments::m12);

  py::class_<Snapshot>(m, "Snapshot")
      .def_readonly("step", &Snapshot::step)
      .def_readonly("time", &Snapshot::time)
      .def_readonly("positions", &Snapshot::positions);

  py::class_<EnergySample>(m, "EnergySample")
      .def_readonly("step", &EnergySample::step)
      .def_readonly("time", &EnergySample::time)
      .def_readonly("energy", &EnergySample::energy);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("snapshots", &Trajectory::snapshots)
      .def_readonly("energy_trace", &Trajectory::energy_trace)
      .def_readonly("final_state", &Trajectory::final_state)
      .def_readonly("final_moments", &Trajectory::final_moments)
      .def_readonly("final_energy", &Trajectory::final_energy)
      .def_readonly("simulated_time", &Trajectory::simulated_time)
      .def_readonly("total_steps", &Trajectory::total_steps)
      .def_readonly("rejected_steps", &Trajectory::rejected_steps);

  m.def("velocity_field", &velocity_field, py::arg("ens"), py::arg("g"),
        py::arg("threads") = 1);
  m.def("step", &step, py::arg("ens"), py::arg("g"), py::arg("dt"),
        py::arg("threads") = 1);
  m.def("empirical_moments", &empirical_moments, py::arg("ens"));
  m.def("containment_fraction", &containment_fraction, py::arg("ens"),
        py::arg("e"), py::arg("inflate"));
  m.def("discrete_energy", &discrete_energy, py::arg("ens"), py::arg("g"));
  m.def("init_ensemble", &init_ensemble, py::arg("cfg"));
  m.def("run", &run, py::arg("cfg"),
        py::call_guard<py::gil_scoped_release>());

  // el checks
  py::class_<GridSpec>(m, "GridSpec")
      .def_readonly("extent", &GridSpec::extent)
      .def_readonly("resolution", &GridSpec::resolution);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("alpha", &ResidualReport::alpha)
      .def_readonly("grid", &ResidualReport::grid)
      .def_readonly("max_abs_interior_residual",
                    &ResidualReport::max_abs_interior_residual)
      .def_readonly("max_abs_gradient_residual",
                    &ResidualReport::max_abs_gradient_residual)
      .def_readonly("argmax_location", &ResidualReport::argmax_location)
      .def_readonly("argmax_gradient_location",
                    &ResidualReport::argmax_gradient_location)
      .def_readonly("interior_points", &ResidualReport::interior_points)
      .def_readonly("min_exterior_margin", &ResidualReport::min_exterior_margin)
      .def_readonly("argmin_location", &ResidualReport::argmin_location)
      .def_readonly("min_radial_margin", &ResidualReport::min_radial_margin)
      .def_readonly("argmin_radial_location",
                    &ResidualReport::argmin_radial_location)
      .def_readonly("min_integrand", &ResidualReport::min_integrand)
      .def_readonly("exterior_points", &ResidualReport::exterior_points)
      .def("to_json", [](const ResidualReport& r) { return to_json(r).dump(); });

  py::class_<C1Report>(m, "C1Report")
      .def_readonly("max_value_mismatch", &C1Report::max_value_mismatch)
      .def_readonly("max_gradient_mismatch", &C1Report::max_gradient_mismatch)
      .def_readonly("argmax_value_theta", &C1Report::argmax_value_theta)
      .def_readonly("argmax_gradient_theta", &C1Report::argmax_gradient_theta)
      .def_readonly("samples", &C1Report::samples)
      .def("to_json", [](const C1Report& r) { return to_json(r).dump(); });

  m.def("check_el1", &check_el1, py::arg("alpha"), py::arg("resolution") = 101);
  m.def("check_el2", &check_el2, py::arg("alpha"), py::arg("extent") = 4.0,
        py::arg("resolution") = 201);
  m.def("check_c1", &check_c1, py::arg("e"), py::arg("alpha"),
        py::arg("n_boundary_samples") = 64);

  // anisotropy reduction
  py::class_<Mat2>(m, "Mat2")
      .def_readonly("m00", &Mat2::m00)
      .def_readonly("m01", &Mat2::m01)
      .def_readonly("m10", &Mat2::m10)
      .def_readonly("m11", &Mat2::m11)
      .def("apply", &Mat2::apply, py::arg("x"))
      .def("det", &Mat2::det);

  py::class_<ReductionResult>(m, "ReductionResult")
      .def_readonly("rotation", &ReductionResult::rotation)
      .def_readonly("effective_strength", &ReductionResult::effective_strength)
      .def_readonly("additive_constant", &ReductionResult::additive_constant)
      .def_readonly("predicted_regime", &ReductionResult::predicted_regime)
      .def_readonly("support_axis", &ReductionResult::support_axis);

  m.def("reduce", &reduce, py::arg("g"));
  m.def("force_zero_lines", &force_zero_lines, py::arg("g"));
}
