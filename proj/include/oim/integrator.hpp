#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oim/coupling.hpp"
#include "oim/noise.hpp"
#include "oim/params.hpp"
#include "oim/types.hpp"

namespace oim {

/// A step produced a NaN or infinite phase.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(std::size_t oscillator, std::size_t step);
  std::size_t oscillator() const { return oscillator_; }
  std::size_t step() const { return step_; }

 private:
  std::size_t oscillator_;
  std::size_t step_;
};

struct TraceSample {
  double t = 0.0;
  double energy = 0.0;  // continuous energy of the live phases
  double ks = 0.0;
  double best_objective = 0.0;
};

struct RunResult {
  StateAssignment best_assignment;
  double best_objective = 0.0;
  PhaseState final_phases;
  std::vector<TraceSample> energy_trace;
  double wall_time = 0.0;  // seconds, integration plus thresholding
  std::size_t steps_executed = 0;
  std::uint64_t seed = 0;
  std::size_t replica = 0;
};

/// Objective of an assignment scored directly on the coupling matrix.
/// Max-cut: sum over pairs i<j of J_ij where the states differ.
/// Coloring: number of coupled pairs i<j sharing a state.
double objective_value(const CouplingMatrix& J, const StateAssignment& s, ProblemKind kind);

/// True when objective `a` is strictly better than `b` for this kind.
bool improves(ProblemKind kind, double a, double b);

/// Deterministic part of dphi_i/dt:
///   K * sum_j J_ij sin(2 pi (phi_i - phi_j)) - ks * sin(2 pi N phi_i).
/// The injection term carries a minus sign so that its stable fixed points
/// are the thresholding targets k/N.
double phase_drift(const CouplingMatrix& J, const PhaseState& phases, std::size_t i, double K,
                   double ks, int n_states);

/// One synchronous forward-Euler step at simulated time t:
///   phi_i' = wrap(phi_i + h * drift_i + kn * z(i, step_index) * sqrt(h)).
/// Every drift reads the pre-step state.
PhaseState euler_step(const PhaseState& phases, const CouplingMatrix& J,
                      const SolverParams& params, double t, const NoiseSource& noise,
                      std::uint64_t step_index);

/// Full simulation from uniformly random phases. Tracks the best thresholded
/// assignment over all trace samples and the final state.
RunResult run(const CouplingMatrix& J, const SolverParams& params, ProblemKind kind);

/// Seed of replica r: seed + r * 0x9E3779B97F4A7C15 (mod 2^64). Replica 0
/// keeps the base seed.
std::uint64_t replica_seed(std::uint64_t seed, std::size_t replica);

/// Best of `replicas` independent runs; ties go to the lowest replica index.
RunResult run_replicas(const CouplingMatrix& J, const SolverParams& params, ProblemKind kind,
                       std::size_t replicas);

}  // namespace oim
