// Command-line front end. Exit codes: 0 success, 1 numerical/tolerance
// failure, 2 usage or domain error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellipselaw/aniso.hpp"
#include "ellipselaw/closed_form.hpp"
#include "ellipselaw/el_check.hpp"
#include "ellipselaw/flow.hpp"
#include "ellipselaw/io_util.hpp"
#include "ellipselaw/quadrature.hpp"
#include "ellipselaw/rng.hpp"
#include "ellipselaw/version.hpp"

namespace el = ellipselaw;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

json make_manifest(const std::string& command, const json& params,
                   Clock::time_point started) {
  const double secs =
      std::chrono::duration<double>(Clock::now() - started).count();
  return {{"command", command},
          {"parameters", params},
          {"version", el::kVersion},
          {"duration_seconds", secs}};
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

const char* region_name(el::Region r) {
  switch (r) {
    case el::Region::Inside: return "inside";
    case el::Region::Boundary: return "boundary";
    case el::Region::Outside: return "outside";
  }
  return "?";
}

// Flat key = value documents mirroring the flag names; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty() && !value.empty()) kv[key] = value;
  }
  return kv;
}

struct ToleranceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// potential

struct PotentialArgs {
  double alpha = 0.0, a = 1.0, b = 1.0;
  double x = 0.0, y = 0.0;
  bool have_point = false;
  std::string grid;  // "extent,resolution"
  std::string out;
  std::string format = "csv";
  bool allow_swap = false;
};

int cmd_potential(const PotentialArgs& args) {
  const auto t0 = Clock::now();
  const el::EllipseDomain e(args.a, args.b);
  const json params = {{"alpha", args.alpha}, {"a", args.a},       {"b", args.b},
                       {"grid", args.grid},   {"out", args.out},   {"format", args.format},
                       {"allow_swap", args.allow_swap}};

  if (args.grid.empty()) {
    const el::Complex z{args.x, args.y};
    const double v = el::potential(z, e, args.alpha, args.allow_swap);
    const el::Complex g = el::grad_potential(z, e, args.alpha, args.allow_swap);
    if (args.format == "json") {
      json j = {{"x1", z.real()},       {"x2", z.imag()},
                {"region", region_name(e.classify(z))},
                {"potential", v},       {"grad1", g.real()},
                {"grad2", g.imag()},    {"manifest", make_manifest("potential", params, t0)}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "region " << region_name(e.classify(z)) << "\n"
                << "potential " << el::fmt_double(v) << "\n"
                << "grad1 " << el::fmt_double(g.real()) << "\n"
                << "grad2 " << el::fmt_double(g.imag()) << "\n";
    }
    return 0;
  }

  // Grid mode.
  double extent = 0.0;
  int resolution = 0;
  {
    std::istringstream is(args.grid);
    char comma = 0;
    if (!(is >> extent >> comma >> resolution) || comma != ',' || extent <= 0.0 ||
        resolution < 2) {
      throw std::invalid_argument("--grid expects extent,resolution with extent > 0, resolution >= 2");
    }
  }
  if (args.out.empty()) {
    throw std::invalid_argument("grid mode requires --out");
  }

  std::ostringstream csv;
  json rows = json::array();
  if (args.format == "csv") csv << "x1,x2,region,potential,grad1,grad2\n";
  for (int iy = 0; iy < resolution; ++iy) {
    const double y = -extent + 2.0 * extent * iy / (resolution - 1);
    for (int ix = 0; ix < resolution; ++ix) {
      const double x = -extent + 2.0 * extent * ix / (resolution - 1);
      const el::Complex z{x, y};
      const double v = el::potential(z, e, args.alpha, args.allow_swap);
      const el::Complex g = el::grad_potential(z, e, args.alpha, args.allow_swap);
      if (args.format == "csv") {
        csv << el::fmt_double(x) << ',' << el::fmt_double(y) << ','
            << region_name(e.classify(z)) << ',' << el::fmt_double(v) << ','
            << el::fmt_double(g.real()) << ',' << el::fmt_double(g.imag()) << '\n';
      } else {
        rows.push_back({{"x1", x}, {"x2", y}, {"region", region_name(e.classify(z))},
                        {"potential", v}, {"grad1", g.real()}, {"grad2", g.imag()}});
      }
    }
  }

  const json manifest = make_manifest("potential", params, t0);
  if (args.format == "csv") {
    write_text_file(args.out, csv.str());
    write_text_file(args.out + ".manifest.json", manifest.dump(2) + "\n");
  } else {
    const json j = {{"rows", rows}, {"manifest", manifest}};
    write_text_file(args.out, j.dump(2) + "\n");
  }
  std::cout << "wrote " << args.out << " (" << resolution * resolution << " points)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// elcheck

struct ElcheckArgs {
  double alpha = 0.0;
  double extent = 4.0;
  int resolution = 201;
  int el1_resolution = 101;
  int boundary_samples = 64;
  double tol = 1e-9;
  double margin_tol = 1e-10;
  std::string out;
};

int cmd_elcheck(const ElcheckArgs& args) {
  const auto t0 = Clock::now();
  const el::ResidualReport r1 = el::check_el1(args.alpha, args.el1_resolution);
  const el::ResidualReport r2 = el::check_el2(args.alpha, args.extent, args.resolution);
  const el::MinimizerDescriptor d = el::minimizer(args.alpha);
  const el::C1Report rc = el::check_c1(*d.ellipse, args.alpha, args.boundary_samples);

  const bool pass_el1 = r1.max_abs_interior_residual <= args.tol &&
                        r1.max_abs_gradient_residual <= args.tol;
  const bool pass_el2 = r2.min_exterior_margin >= -args.margin_tol &&
                        r2.min_radial_margin >= -args.margin_tol;
  const bool pass_c1 = rc.max_value_mismatch <= args.tol &&
                       rc.max_gradient_mismatch <= args.tol;

  const json params = {{"alpha", args.alpha},
                       {"extent", args.extent},
                       {"resolution", args.resolution},
                       {"el1_resolution", args.el1_resolution},
                       {"boundary_samples", args.boundary_samples},
                       {"tol", args.tol},
                       {"margin_tol", args.margin_tol}};
  json report = {{"el1", el::to_json(r1)},
                 {"el2", el::to_json(r2)},
                 {"c1", el::to_json(rc)},
                 {"pass", {{"el1", pass_el1}, {"el2", pass_el2}, {"c1", pass_c1}}},
                 {"manifest", make_manifest("elcheck", params, t0)}};
  const std::string text = report.dump(2) + "\n";
  if (!args.out.empty()) write_text_file(args.out, text);
  std::cout << text;
  if (!(pass_el1 && pass_el2 && pass_c1)) {
    throw ToleranceFailure("elcheck: a residual tolerance was violated");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
  std::string config;
  el::SimConfig cfg;
  std::string init = "uniform_disk";
  std::string out;
};

void apply_config_file(SimulateArgs& args, CLI::App* cmd) {
  const auto kv = read_config(args.config);
  // Flags take precedence over file values.
  const auto set_if_default = [&](const char* flag, const std::string& key,
                                  auto setter) {
    const auto it = kv.find(key);
    if (it != kv.end() && cmd->count(flag) == 0) setter(it->second);
  };
  set_if_default("--n", "n", [&](const std::string& v) { args.cfg.n_particles = std::stoi(v); });
  set_if_default("--dt", "dt", [&](const std::string& v) { args.cfg.dt = std::stod(v); });
  set_if_default("--t-end", "t_end", [&](const std::string& v) { args.cfg.t_end = std::stod(v); });
  set_if_default("--alpha", "alpha", [&](const std::string& v) { args.cfg.interaction.alpha = std::stod(v); });
  set_if_default("--beta", "beta", [&](const std::string& v) { args.cfg.interaction.beta = std::stod(v); });
  set_if_default("--gamma", "gamma", [&](const std::string& v) { args.cfg.interaction.gamma = std::stod(v); });
  set_if_default("--init", "init", [&](const std::string& v) { args.init = v; });
  set_if_default("--init-radius", "init_radius", [&](const std::string& v) { args.cfg.init_radius = std::stod(v); });
  set_if_default("--init-sigma", "init_sigma", [&](const std::string& v) { args.cfg.init_sigma = std::stod(v); });
  set_if_default("--seed", "seed", [&](const std::string& v) { args.cfg.seed = std::stoull(v); });
  set_if_default("--record-every", "record_every", [&](const std::string& v) { args.cfg.record_every = std::stoi(v); });
  set_if_default("--threads", "threads", [&](const std::string& v) { args.cfg.threads = std::stoi(v); });
}

int cmd_simulate(SimulateArgs& args, CLI::App* cmd) {
  const auto t0 = Clock::now();
  if (!args.config.empty()) apply_config_file(args, cmd);
  if (args.init == "uniform_disk") {
    args.cfg.init = el::InitKind::UniformDisk;
  } else if (args.init == "gaussian") {
    args.cfg.init = el::InitKind::Gaussian;
  } else {
    throw std::invalid_argument("--init must be uniform_disk or gaussian");
  }

  const el::Trajectory traj = el::run(args.cfg);

  std::filesystem::create_directories(args.out);
  const std::string csv_path = args.out + "/snapshots.csv";
  std::ostringstream csv;
  el::write_snapshots_csv(csv, traj);
  write_text_file(csv_path, csv.str());

  const json params = {{"n", args.cfg.n_particles},
                       {"dt", args.cfg.dt},
                       {"t_end", args.cfg.t_end},
                       {"alpha", args.cfg.interaction.alpha},
                       {"beta", args.cfg.interaction.beta},
                       {"gamma", args.cfg.interaction.gamma},
                       {"init", args.init},
                       {"init_radius", args.cfg.init_radius},
                       {"init_sigma", args.cfg.init_sigma},
                       {"seed", args.cfg.seed},
                       {"record_every", args.cfg.record_every},
                       {"threads", args.cfg.threads},
                       {"out", args.out}};
  const json manifest = make_manifest("simulate", params, t0);
  write_text_file(csv_path + ".manifest.json", manifest.dump(2) + "\n");

  json summary = el::summary_json(traj, args.cfg);
  summary["manifest"] = manifest;
  write_text_file(args.out + "/summary.json", summary.dump(2) + "\n");

  std::cout << "final moments: m11 " << el::fmt_double(traj.final_moments.m11)
            << "  m22 " << el::fmt_double(traj.final_moments.m22) << "  m12 "
            << el::fmt_double(traj.final_moments.m12) << "\n"
            << "wrote " << args.out << "/snapshots.csv and summary.json\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle-compare

struct OracleArgs {
  double alpha = 0.0, a = 1.0, b = 1.0;
  std::string points_file;
  int random_points = 0;
  std::uint64_t seed = 1;
  double tol = 1e-4;
  int radial_nodes = 128;
  int angular_nodes = 256;
  int max_refinements = 4;
  std::string out;
};

int cmd_oracle_compare(const OracleArgs& args) {
  const auto t0 = Clock::now();
  const el::EllipseDomain e(args.a, args.b);

  std::vector<el::Complex> points;
  if (!args.points_file.empty()) {
    std::ifstream in(args.points_file);
    if (!in) throw std::runtime_error("cannot open points file: " + args.points_file);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream is(line);
      double x, y;
      if (is >> x >> y) points.push_back({x, y});
    }
    if (points.empty()) throw std::invalid_argument("points file holds no points");
  } else {
    if (args.random_points < 1) {
      throw std::invalid_argument("need --points FILE or --random N");
    }
    el::Rng rng(args.seed);
    for (int i = 0; i < args.random_points; ++i) {
      if (i % 2 == 0) {
        points.push_back(el::sample_uniform_ellipse(rng, e));
      } else {
        el::Complex z;
        do {
          z = {rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0)};
        } while (e.classify(z) != el::Region::Outside);
        points.push_back(z);
      }
    }
  }

  el::QuadratureConfig qcfg;
  qcfg.radial_nodes = args.radial_nodes;
  qcfg.angular_nodes = args.angular_nodes;
  qcfg.max_refinements = args.max_refinements;

  double worst = 0.0;
  el::Complex worst_at{0.0, 0.0};
  int unconverged = 0;
  for (const el::Complex& z : points) {
    const el::ConvResult p =
        el::conv_oracle(el::ConvKernel::WAlpha, z, e, args.alpha, qcfg, args.tol * 0.1);
    const el::ConvResult g =
        el::conv_oracle(el::ConvKernel::GradWAlpha, z, e, args.alpha, qcfg, args.tol * 0.1);
    if (!p.converged || !g.converged) ++unconverged;
    const double pot = el::potential(z, e, args.alpha, true);
    const el::Complex grad = el::grad_potential(z, e, args.alpha, true);
    const double dp = std::abs(pot - p.value.real()) / std::max(1.0, std::abs(pot));
    const double dg = std::abs(grad - g.value) / std::max(1.0, std::abs(grad));
    if (std::max(dp, dg) > worst) {
      worst = std::max(dp, dg);
      worst_at = z;
    }
  }

  const bool pass = worst <= args.tol;
  const json params = {{"alpha", args.alpha},
                       {"a", args.a},
                       {"b", args.b},
                       {"points", static_cast<int>(points.size())},
                       {"seed", args.seed},
                       {"tol", args.tol},
                       {"radial_nodes", args.radial_nodes},
                       {"angular_nodes", args.angular_nodes},
                       {"max_refinements", args.max_refinements}};
  const json report = {{"max_rel_discrepancy", worst},
                       {"argmax", {worst_at.real(), worst_at.imag()}},
                       {"unconverged_quadratures", unconverged},
                       {"pass", pass},
                       {"manifest", make_manifest("oracle-compare", params, t0)}};
  const std::string text = report.dump(2) + "\n";
  if (!args.out.empty()) write_text_file(args.out, text);
  std::cout << text;
  if (!pass) throw ToleranceFailure("oracle-compare: discrepancy above tolerance");
  return 0;
}

// ---------------------------------------------------------------------------
// reduce

int cmd_reduce(double alpha, double beta, double gamma) {
  const auto t0 = Clock::now();
  const el::GeneralAnisotropy g{alpha, beta, gamma};
  const el::ReductionResult r = el::reduce(g);
  const el::Mat2& R = r.rotation;
  // Orthogonality echo: max entry of R^T R - I.
  const double ortho = std::max(
      {std::abs(R.m00 * R.m00 + R.m10 * R.m10 - 1.0),
       std::abs(R.m01 * R.m01 + R.m11 * R.m11 - 1.0),
       std::abs(R.m00 * R.m01 + R.m10 * R.m11)});
  json j = {{"rotation", {{R.m00, R.m01}, {R.m10, R.m11}}},
            {"rotation_det", R.det()},
            {"orthogonality_residual", ortho},
            {"effective_strength", r.effective_strength},
            {"additive_constant", r.additive_constant},
            {"regime", r.predicted_regime == el::MinimizerRegime::Semicircle
                           ? "semicircle"
                           : "ellipse"},
            {"support_axis", {r.support_axis.real(), r.support_axis.imag()}}};
  if (gamma != 0.0) {
    const auto [l1, l2] = el::force_zero_lines(g);
    j["force_zero_lines"] = {{l1.real(), l1.imag()}, {l2.real(), l2.imag()}};
  }
  j["manifest"] = make_manifest(
      "reduce", {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}}, t0);
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// energy

struct EnergyArgs {
  double alpha = 0.0;
  double a = 0.0, b = 0.0;
  bool use_minimizer = false;
  long long mc_samples = 0;
  std::uint64_t seed = 1;
  bool allow_swap = false;
};

int cmd_energy(const EnergyArgs& args) {
  const auto t0 = Clock::now();
  std::optional<el::EllipseDomain> e;
  json j;
  if (args.use_minimizer) {
    const el::MinimizerDescriptor d = el::minimizer(args.alpha);
    if (!d.ellipse.has_value()) {
      throw std::domain_error("energy --minimizer: no ellipse support for |alpha| >= 1");
    }
    e = *d.ellipse;
    j["min_energy"] = el::min_energy(std::abs(args.alpha));
    j["energy"] = el::ellipse_energy(*e, args.alpha, true);
  } else {
    if (!(args.a > 0.0) || !(args.b > 0.0)) {
      throw std::invalid_argument("energy: provide --a and --b, or --minimizer");
    }
    e = el::EllipseDomain(args.a, args.b);
    j["energy"] = el::ellipse_energy(*e, args.alpha, args.allow_swap);
  }
  j["a"] = e->a();
  j["b"] = e->b();

  bool pass = true;
  if (args.mc_samples > 0) {
    el::QuadratureConfig qcfg;
    qcfg.mc_samples = args.mc_samples;
    qcfg.rng_seed = args.seed;
    el::EllipseDomain mc_domain = *e;
    double mc_alpha = args.alpha;
    double shift = 0.0;
    if (e->a() > e->b()) {  // sampler is orientation-agnostic; energy uses the swap
      mc_domain = el::EllipseDomain(e->b(), e->a());
      mc_alpha = -args.alpha;
      shift = 0.5 * args.alpha;
    }
    const el::EnergyEstimate est = el::energy_oracle(mc_domain, mc_alpha, qcfg);
    const double value = est.value + shift;
    const double dev = std::abs(value - j["energy"].get<double>());
    j["monte_carlo"] = {{"estimate", value},
                        {"std_error", est.std_error},
                        {"samples", est.samples},
                        {"deviation", dev},
                        {"deviation_over_sigma", dev / est.std_error}};
    pass = dev <= 3.0 * est.std_error;
    j["monte_carlo"]["pass"] = pass;
  }

  const json params = {{"alpha", args.alpha},   {"a", args.a},
                       {"b", args.b},           {"minimizer", args.use_minimizer},
                       {"mc_samples", args.mc_samples}, {"seed", args.seed},
                       {"allow_swap", args.allow_swap}};
  j["manifest"] = make_manifest("energy", params, t0);
  std::cout << j.dump(2) << "\n";
  if (!pass) throw ToleranceFailure("energy: Monte Carlo estimate beyond 3 sigma");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ellipselaw: anisotropic nonlocal energy toolkit"};
  app.set_version_flag("--version", el::kVersion);
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for parallel commands")
      ->capture_default_str();

  PotentialArgs pot;
  CLI::App* c_pot = app.add_subcommand("potential", "evaluate the convolution potential and its gradient");
  c_pot->add_option("--alpha", pot.alpha, "anisotropy strength")->required();
  c_pot->add_option("--a", pot.a, "horizontal semi-axis")->required();
  c_pot->add_option("--b", pot.b, "vertical semi-axis")->required();
  auto* optx = c_pot->add_option("--x", pot.x, "point x1");
  auto* opty = c_pot->add_option("--y", pot.y, "point x2");
  auto* optg = c_pot->add_option("--grid", pot.grid, "grid mode: extent,resolution");
  optg->excludes(optx)->excludes(opty);
  c_pot->add_option("--out", pot.out, "output file (grid mode)");
  c_pot->add_option("--format", pot.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  c_pot->add_flag("--allow-swap", pot.allow_swap, "accept a > b via the coordinate swap");

  ElcheckArgs elc;
  CLI::App* c_elc = app.add_subcommand("elcheck", "verify the optimality conditions on grids");
  c_elc->add_option("--alpha", elc.alpha, "anisotropy strength in [0,1)")->required();
  c_elc->add_option("--extent", elc.extent, "exterior grid half-width")->capture_default_str();
  c_elc->add_option("--resolution", elc.resolution, "exterior grid resolution")->capture_default_str();
  c_elc->add_option("--el1-resolution", elc.el1_resolution, "interior grid resolution")->capture_default_str();
  c_elc->add_option("--boundary-samples", elc.boundary_samples, "C1 boundary samples")->capture_default_str();
  c_elc->add_option("--tol", elc.tol, "residual tolerance")->capture_default_str();
  c_elc->add_option("--margin-tol", elc.margin_tol, "allowed negative exterior margin")->capture_default_str();
  c_elc->add_option("--out", elc.out, "JSON report path");

  SimulateArgs sim;
  CLI::App* c_sim = app.add_subcommand("simulate", "run the interacting-particle gradient flow");
  c_sim->add_option("--config", sim.config, "flat key=value config file");
  c_sim->add_option("--n", sim.cfg.n_particles, "particle count")->capture_default_str();
  c_sim->add_option("--dt", sim.cfg.dt, "time step")->capture_default_str();
  c_sim->add_option("--t-end", sim.cfg.t_end, "simulated time")->capture_default_str();
  c_sim->add_option("--alpha", sim.cfg.interaction.alpha, "kernel alpha")->capture_default_str();
  c_sim->add_option("--beta", sim.cfg.interaction.beta, "kernel beta")->capture_default_str();
  c_sim->add_option("--gamma", sim.cfg.interaction.gamma, "kernel gamma")->capture_default_str();
  c_sim->add_option("--init", sim.init, "uniform_disk or gaussian")->capture_default_str();
  c_sim->add_option("--init-radius", sim.cfg.init_radius, "uniform disk radius")->capture_default_str();
  c_sim->add_option("--init-sigma", sim.cfg.init_sigma, "gaussian sigma")->capture_default_str();
  c_sim->add_option("--seed", sim.cfg.seed, "RNG seed")->capture_default_str();
  c_sim->add_option("--record-every", sim.cfg.record_every, "snapshot cadence in steps")->capture_default_str();
  c_sim->add_option("--out", sim.out, "output directory")->required();

  OracleArgs ora;
  CLI::App* c_ora = app.add_subcommand("oracle-compare", "closed forms vs brute-force quadrature");
  c_ora->add_option("--alpha", ora.alpha, "anisotropy strength")->required();
  c_ora->add_option("--a", ora.a, "horizontal semi-axis")->required();
  c_ora->add_option("--b", ora.b, "vertical semi-axis")->required();
  auto* optpf = c_ora->add_option("--points", ora.points_file, "CSV/whitespace x1 x2 file");
  auto* optrn = c_ora->add_option("--random", ora.random_points, "sample N points (half interior, half exterior)");
  optrn->excludes(optpf);
  c_ora->add_option("--seed", ora.seed, "RNG seed for --random")->capture_default_str();
  c_ora->add_option("--tol", ora.tol, "max relative discrepancy")->capture_default_str();
  c_ora->add_option("--radial-nodes", ora.radial_nodes, "base radial nodes")->capture_default_str();
  c_ora->add_option("--angular-nodes", ora.angular_nodes, "base angular nodes")->capture_default_str();
  c_ora->add_option("--max-refinements", ora.max_refinements, "node doublings")->capture_default_str();
  c_ora->add_option("--out", ora.out, "JSON report path");

  double r_alpha = 0.0, r_beta = 0.0, r_gamma = 0.0;
  std::string r_format = "json";
  CLI::App* c_red = app.add_subcommand("reduce", "rotation reduction of a general anisotropy");
  c_red->add_option("--alpha", r_alpha, "x1^2 weight")->required();
  c_red->add_option("--beta", r_beta, "x2^2 weight")->required();
  c_red->add_option("--gamma", r_gamma, "x1 x2 weight")->required();
  c_red->add_option("--format", r_format, "json")->check(CLI::IsMember({"json"}));

  EnergyArgs ene;
  CLI::App* c_ene = app.add_subcommand("energy", "energy of an elliptical measure");
  c_ene->add_option("--alpha", ene.alpha, "anisotropy strength")->required();
  auto* opta = c_ene->add_option("--a", ene.a, "horizontal semi-axis");
  auto* optb = c_ene->add_option("--b", ene.b, "vertical semi-axis");
  auto* optm = c_ene->add_flag("--minimizer", ene.use_minimizer, "use the minimizer axes");
  optm->excludes(opta)->excludes(optb);
  c_ene->add_option("--mc-samples", ene.mc_samples, "Monte Carlo cross-check sample count");
  c_ene->add_option("--seed", ene.seed, "Monte Carlo seed")->capture_default_str();
  c_ene->add_flag("--allow-swap", ene.allow_swap, "accept a > b via the coordinate swap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_pot) return cmd_potential(pot);
    if (*c_elc) return cmd_elcheck(elc);
    if (*c_sim) {
      sim.cfg.threads = threads;
      return cmd_simulate(sim, c_sim);
    }
    if (*c_ora) return cmd_oracle_compare(ora);
    if (*c_red) return cmd_reduce(r_alpha, r_beta, r_gamma);
    if (*c_ene) return cmd_energy(ene);
  } catch (const ToleranceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const el::CollisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
