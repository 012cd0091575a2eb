#include "ellipselaw/flow.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

#include "ellipselaw/closed_form.hpp"
#include "ellipselaw/io_util.hpp"
#include "ellipselaw/rng.hpp"

namespace ellipselaw {

namespace {

constexpr double kCollisionDistanceSq = kCollisionDistance * kCollisionDistance;

void require_valid(const ParticleEnsemble& ens) {
  if (ens.positions.size() < 2) {
    throw std::invalid_argument("flow: ensemble needs at least 2 particles");
  }
  for (const Complex& p : ens.positions) {
    if (!is_finite(p)) {
      throw std::invalid_argument("flow: non-finite particle position");
    }
  }
}

double min_pair_distance_sq(const std::vector<Complex>& xs) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::min(best, std::norm(xs[i] - xs[j]));
    }
  }
  return best;
}

// v_i over the index range [lo, hi); inner sum in fixed j order.
void velocity_range(const std::vector<Complex>& xs, const GeneralAnisotropy& g,
                    std::size_t lo, std::size_t hi, std::vector<Complex>& out,
                    std::atomic<bool>& collided) {
  const std::size_t n = xs.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t i = lo; i < hi; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex d = xs[i] - xs[j];
      if (std::norm(d) < kCollisionDistanceSq) {
        collided.store(true, std::memory_order_relaxed);
        return;
      }
      acc += grad_w_general(d, g);
    }
    out[i] = -inv_n * acc - xs[i];
  }
}

}  // namespace

std::vector<Complex> velocity_field(const ParticleEnsemble& ens,
                                    const GeneralAnisotropy& g, int threads) {
  require_valid(ens);
  const std::vector<Complex>& xs = ens.positions;
  const std::size_t n = xs.size();
  std::vector<Complex> v(n);
  std::atomic<bool> collided{false};

  if (threads <= 1 || n < 64) {
    velocity_range(xs, g, 0, n, v, collided);
  } else {
    const std::size_t nthreads = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(velocity_range, std::cref(xs), std::cref(g), lo, hi,
                        std::ref(v), std::ref(collided));
    }
    for (auto& th : pool) th.join();
  }

  if (collided.load()) {
    throw CollisionError("velocity_field: pairwise distance below collision threshold");
  }
  return v;
}

double step(ParticleEnsemble& ens, const GeneralAnisotropy& g, double dt,
            int threads) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw std::invalid_argument("step: dt must be finite and nonnegative");
  }
  const std::vector<Complex> v = velocity_field(ens, g, threads);
  const std::size_t n = ens.positions.size();
  std::vector<Complex> moved(n);
  double used = dt;
  for (int attempt = 0; attempt <= 20; ++attempt) {
    for (std::size_t i = 0; i < n; ++i) {
      moved[i] = ens.positions[i] + used * v[i];
    }
    if (used == 0.0 || min_pair_distance_sq(moved) >= kCollisionDistanceSq) {
      ens.positions = std::move(moved);
      ++ens.step_count;
      return used;
    }
    used *= 0.5;
  }
  throw CollisionError("step: rejected after 20 dt halvings");
}

Moments empirical_moments(const ParticleEnsemble& ens) {
  Moments m;
  for (const Complex& p : ens.positions) {
    m.m11 += p.real() * p.real();
    m.m22 += p.imag() * p.imag();
    m.m12 += p.real() * p.imag();
  }
  const double inv_n = 1.0 / static_cast<double>(ens.positions.size());
  m.m11 *= inv_n;
  m.m22 *= inv_n;
  m.m12 *= inv_n;
  return m;
}

double containment_fraction(const ParticleEnsemble& ens, const EllipseDomain& e,
                            double inflate) {
  if (!(inflate >= 1.0)) {
    throw std::invalid_argument("containment_fraction: inflate must be >= 1");
  }
  const EllipseDomain big(inflate * e.a(), inflate * e.b());
  long inside = 0;
  for (const Complex& p : ens.positions) {
    if (big.quadratic(p) <= 1.0) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(ens.positions.size());
}

double discrete_energy(const ParticleEnsemble& ens, const GeneralAnisotropy& g) {
  require_valid(ens);
  const std::vector<Complex>& xs = ens.positions;
  const std::size_t n = xs.size();
  double interaction = 0.0, confinement = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex d = xs[i] - xs[j];
      if (std::norm(d) < kCollisionDistanceSq) {
        throw CollisionError("discrete_energy: coincident particles");
      }
      interaction += w_general(d, g);
    }
  }
  for (const Complex& p : xs) confinement += std::norm(p);
  const double nn = static_cast<double>(n);
  return interaction / (nn * nn) + confinement / (2.0 * nn);
}

ParticleEnsemble init_ensemble(const SimConfig& cfg) {
  if (cfg.n_particles < 2) {
    throw std::invalid_argument("init_ensemble: n_particles must be >= 2");
  }
  ParticleEnsemble ens;
  ens.rng_seed = cfg.seed;
  ens.positions.resize(cfg.n_particles);
  Rng rng(cfg.seed);
  for (Complex& p : ens.positions) {
    if (cfg.init == InitKind::UniformDisk) {
      p = cfg.init_radius * rng.in_unit_disk();
    } else {
      p = {cfg.init_sigma * rng.normal(), cfg.init_sigma * rng.normal()};
    }
  }
  return ens;
}

Trajectory run(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end > 0.0)) {
    throw std::invalid_argument("run: dt and t_end must be positive");
  }
  if (cfg.record_every < 1) {
    throw std::invalid_argument("run: record_every must be >= 1");
  }

  Trajectory traj;
  ParticleEnsemble ens = init_ensemble(cfg);
  const long n_steps =
      static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  double time = 0.0;

  const auto record = [&](long k) {
    traj.snapshots.push_back({k, time, ens.positions});
    traj.energy_trace.push_back({k, time, discrete_energy(ens, cfg.interaction)});
  };

  record(0);
  for (long k = 1; k <= n_steps; ++k) {
    const double used = step(ens, cfg.interaction, cfg.dt, cfg.threads);
    time += used;
    if (used != cfg.dt) ++traj.rejected_steps;
    if (k % cfg.record_every == 0 || k == n_steps) record(k);
  }

  traj.final_moments = empirical_moments(ens);
  traj.final_energy = traj.energy_trace.back().energy;
  traj.simulated_time = time;
  traj.total_steps = n_steps;
  traj.final_state = std::move(ens);
  return traj;
}

void write_snapshots_csv(std::ostream& out, const Trajectory& traj) {
  out << "step,particle_index,x1,x2\n";
  for (const Snapshot& s : traj.snapshots) {
    for (std::size_t i = 0; i < s.positions.size(); ++i) {
      out << s.step << ',' << i << ',' << fmt_double(s.positions[i].real())
          << ',' << fmt_double(s.positions[i].imag()) << '\n';
    }
  }
}

nlohmann::json summary_json(const Trajectory& traj, const SimConfig& cfg) {
  nlohmann::json j;
  const Moments& m = traj.final_moments;
  j["n_particles"] = cfg.n_particles;
  j["dt"] = cfg.dt;
  j["t_end"] = cfg.t_end;
  j["seed"] = cfg.seed;
  j["steps"] = traj.total_steps;
  j["rejected_steps"] = traj.rejected_steps;
  j["simulated_time"] = traj.simulated_time;
  j["interaction"] = {{"alpha", cfg.interaction.alpha},
                      {"beta", cfg.interaction.beta},
                      {"gamma", cfg.interaction.gamma}};
  j["final_moments"] = {{"m11", m.m11}, {"m22", m.m22}, {"m12", m.m12}};
  j["final_energy"] = traj.final_energy;

  // Principal decomposition of the second-moment matrix [[m11,m12],[m12,m22]].
  const double half_tr = 0.5 * (m.m11 + m.m22);
  const double det = m.m11 * m.m22 - m.m12 * m.m12;
  const double gap = std::sqrt(std::max(0.0, half_tr * half_tr - det));
  const double angle = 0.5 * std::atan2(2.0 * m.m12, m.m11 - m.m22);
  j["covariance"] = {{"eigenvalue_major", half_tr + gap},
                     {"eigenvalue_minor", half_tr - gap},
                     {"principal_angle_rad", angle}};

  nlohmann::json trace = nlohmann::json::array();
  for (const EnergySample& s : traj.energy_trace) {
    trace.push_back({{"step", s.step}, {"time", s.time}, {"energy", s.energy}});
  }
  j["energy_trace"] = std::move(trace);

  // Containment against the predicted support for the single-parameter
  // kernel; wall-regime runs are diagnosed by the axis moments instead.
  if (cfg.interaction.beta == 0.0 && cfg.interaction.gamma == 0.0) {
    const MinimizerDescriptor d = minimizer(cfg.interaction.alpha);
    if (d.ellipse.has_value()) {
      j["containment"] = {
          {"a", d.ellipse->a()},
          {"b", d.ellipse->b()},
          {"inflate", 1.05},
          {"fraction",
           containment_fraction(traj.final_state, *d.ellipse, 1.05)}};
    } else {
      j["axis_collapse"] = {{"m11", m.m11}, {"m22", m.m22}};
    }
  }
  return j;
}

}  // namespace ellipselaw
