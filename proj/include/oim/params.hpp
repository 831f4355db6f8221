#pragma once

#include <cstddef>
#include <cstdint>

#include "oim/schedule.hpp"

namespace oim {

/// Every knob of a simulation run.
///
/// `workers` and `batch_size` only affect how a step is scheduled, never its
/// result.
struct SolverParams {
  double K = 1.0;          // global coupling strength
  double ks_max = 2.0;     // peak injection-locking strength
  double ks_period = 10.0; // simulated time per triangle cycle
  double kn = 0.2;         // noise strength
  double h = 0.01;         // Euler time step
  double t_stop = 100.0;   // total simulated time
  int n_states = 2;
  std::uint64_t seed = 0;
  std::size_t batch_size = 256;
  /// 0 picks the available hardware threads, capped by OIM_MAX_WORKERS.
  std::size_t workers = 1;
  /// Simulated time between best-so-far samples; 0 means ks_period / 2.
  double trace_stride = 0.0;

  /// Defaults scaled to an n-oscillator problem:
  /// t_stop = 100 * n^0.25 and ks_period = t_stop / 10.
  static SolverParams defaults_for(std::size_t n, int n_states = 2);

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;

  KsSchedule schedule() const { return KsSchedule(ks_max, ks_period); }
  double effective_trace_stride() const { return trace_stride > 0.0 ? trace_stride : ks_period / 2; }
  /// ceil(t_stop / h), tolerant of representation error in the ratio.
  std::size_t step_count() const;
};

/// Worker count after resolving 0 and applying the OIM_MAX_WORKERS cap.
std::size_t resolve_workers(std::size_t requested);

}  // namespace oim
