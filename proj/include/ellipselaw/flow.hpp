#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "ellipselaw/ellipse.hpp"
#include "ellipselaw/kernel.hpp"

#include "json.hpp"

namespace ellipselaw {

// Interacting-particle discretization of the gradient flow
//   d x_i/dt = -(1/N) sum_{j != i} grad W(x_i - x_j) - x_i,
// the descent dynamics of the discrete energy
//   E_N = (1/(2 N^2)) sum_{i != j} W(x_i - x_j) + (1/(2N)) sum_i |x_i|^2.

// Below this pairwise distance the velocities are no longer float-safe.
inline constexpr double kCollisionDistance = 1e-9;

class CollisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// N equally weighted positions approximating a probability measure.
struct ParticleEnsemble {
  std::vector<Complex> positions;
  std::uint64_t rng_seed = 0;
  long step_count = 0;
};

enum class InitKind { UniformDisk, Gaussian };

struct SimConfig {
  int n_particles = 500;
  double dt = 1e-3;
  double t_end = 20.0;
  GeneralAnisotropy interaction{};  // {alpha, 0, 0} for the single-parameter kernel
  InitKind init = InitKind::UniformDisk;
  double init_radius = 2.0;  // uniform-disk radius; contains every bounded minimizer support
  double init_sigma = 1.0;   // gaussian standard deviation
  std::uint64_t seed = 1;
  int record_every = 1000;
  int threads = 1;
};

// v_i for every particle. Exact O(N^2) summation; the inner sum runs over j in
// index order for every i, so results are bit-identical for any thread count.
// Throws CollisionError if any pairwise distance is below kCollisionDistance.
std::vector<Complex> velocity_field(const ParticleEnsemble& ens,
                                    const GeneralAnisotropy& g, int threads = 1);

// One forward-Euler step. If the move would create a collision the step is
// rejected and dt halved, up to 20 times, before CollisionError is thrown.
// Returns the dt actually applied.
double step(ParticleEnsemble& ens, const GeneralAnisotropy& g, double dt,
            int threads = 1);

struct Moments {
  double m11 = 0.0;  // mean x1^2
  double m22 = 0.0;  // mean x2^2
  double m12 = 0.0;  // mean x1 x2
};

Moments empirical_moments(const ParticleEnsemble& ens);

// Fraction of particles with x1^2/(inflate a)^2 + x2^2/(inflate b)^2 <= 1.
double containment_fraction(const ParticleEnsemble& ens, const EllipseDomain& e,
                            double inflate);

// E_N, self-interactions excluded.
double discrete_energy(const ParticleEnsemble& ens, const GeneralAnisotropy& g);

struct Snapshot {
  long step = 0;
  double time = 0.0;
  std::vector<Complex> positions;
};

struct EnergySample {
  long step = 0;
  double time = 0.0;
  double energy = 0.0;
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::vector<EnergySample> energy_trace;
  ParticleEnsemble final_state;
  Moments final_moments;
  double final_energy = 0.0;
  double simulated_time = 0.0;
  long total_steps = 0;
  long rejected_steps = 0;
};

ParticleEnsemble init_ensemble(const SimConfig& cfg);

// Runs ceil(t_end/dt) steps of nominal size dt (collision retries may shorten
// individual steps), recording a snapshot and an energy sample every
// record_every steps plus the initial and final states. Deterministic for a
// fixed seed and config.
Trajectory run(const SimConfig& cfg);

// CSV with header "step,particle_index,x1,x2", floats at 17 significant digits.
void write_snapshots_csv(std::ostream& out, const Trajectory& traj);

// Final moments, energy trace, containment against the predicted support.
nlohmann::json summary_json(const Trajectory& traj, const SimConfig& cfg);

}  // namespace ellipselaw
