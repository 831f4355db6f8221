#include "oim/integrator.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oim/energy.hpp"

namespace oim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Phases plus their sin/cos tables. The tables of the next state are filled
/// while it is written, so a step reads one frozen snapshot and writes another.
struct Snapshot {
  std::vector<double> phase;
  std::vector<double> sin;
  std::vector<double> cos;

  explicit Snapshot(std::size_t n) : phase(n), sin(n), cos(n) {}

  void set(std::size_t i, double p) {
    phase[i] = p;
    sin[i] = std::sin(kTwoPi * p);
    cos[i] = std::cos(kTwoPi * p);
  }
};

/// Im((cos x + i sin x)^n) = sin(n x), from the cached sin/cos of x.
double sin_multiple(double sin_x, double cos_x, int n) {
  double re = cos_x;
  double im = sin_x;
  for (int k = 1; k < n; ++k) {
    const double next_re = re * cos_x - im * sin_x;
    im = re * sin_x + im * cos_x;
    re = next_re;
  }
  return im;
}

/// sin(2 pi (p_i - p_j)) = sin_i cos_j - cos_i sin_j, so the coupling sum
/// needs two row dot products and no per-pair trig.
double drift_from_snapshot(const CouplingMatrix& J, const Snapshot& s, std::size_t i, double K,
                           double ks, int n_states) {
  const auto [sum_cos, sum_sin] = J.row_dot2(i, s.cos.data(), s.sin.data());
  const double coupling = s.sin[i] * sum_cos - s.cos[i] * sum_sin;
  const double injection = ks == 0.0 ? 0.0 : ks * sin_multiple(s.sin[i], s.cos[i], n_states);
  return K * coupling - injection;
}

class Stepper {
 public:
  Stepper(const CouplingMatrix& J, const SolverParams& params, const NoiseSource& noise)
      : J_(J), params_(params), noise_(noise), sqrt_h_(std::sqrt(params.h)) {}

  /// Advances oscillators [begin, end) from `cur` into `next`. Returns the
  /// first oscillator whose update was not finite, or npos.
  ///
  /// With `spare` set, an even step stores the second draw of its normal pair
  /// in spare[i] and the following odd step consumes it; the draws are the same
  /// as NoiseSource::normal(i, step). Without it each draw is computed alone.
  std::size_t update_range(const Snapshot& cur, Snapshot& next, std::size_t begin,
                           std::size_t end, double ks, std::uint64_t step,
                           double* spare = nullptr) const {
    std::size_t bad = npos;
    for (std::size_t i = begin; i < end; ++i) {
      double x = cur.phase[i] + params_.h * drift_from_snapshot(J_, cur, i, params_.K, ks,
                                                                params_.n_states);
      if (params_.kn > 0.0) {
        double z = 0.0;
        if (spare == nullptr) {
          z = noise_.normal(i, step);
        } else if (step % 2 == 0) {
          const auto pair = noise_.normal_pair(i, step / 2);
          z = pair.first;
          spare[i] = pair.second;
        } else {
          z = spare[i];
        }
        x += params_.kn * z * sqrt_h_;
      }
      if (!std::isfinite(x)) {
        if (bad == npos) bad = i;
        next.phase[i] = 0.0;
        next.sin[i] = 0.0;
        next.cos[i] = 1.0;
        continue;
      }
      next.set(i, wrap_unit(x));
    }
    return bad;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  const CouplingMatrix& J_;
  const SolverParams& params_;
  const NoiseSource& noise_;
  double sqrt_h_;
};

Snapshot snapshot_of(std::span<const double> phases) {
  Snapshot s(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) s.set(i, phases[i]);
  return s;
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t prev = target.load(std::memory_order_relaxed);
  while (value < prev && !target.compare_exchange_weak(prev, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

NumericalError::NumericalError(std::size_t oscillator, std::size_t step)
    : std::runtime_error("non-finite phase for oscillator " + std::to_string(oscillator) +
                         " at step " + std::to_string(step)),
      oscillator_(oscillator),
      step_(step) {}

double objective_value(const CouplingMatrix& J, const StateAssignment& s, ProblemKind kind) {
  if (J.size() != s.size())
    throw DimensionError("assignment has " + std::to_string(s.size()) +
                         " entries but the coupling matrix has " + std::to_string(J.size()) +
                         " oscillators");
  double value = 0.0;
  for (std::size_t i = 0; i < J.size(); ++i)
    J.for_each_in_row(i, [&](std::size_t j, double w) {
      if (j <= i) return;
      if (kind == ProblemKind::MaxCut) {
        if (s[i] != s[j]) value += w;
      } else if (s[i] == s[j]) {
        value += 1.0;
      }
    });
  return value;
}

bool improves(ProblemKind kind, double a, double b) {
  return kind == ProblemKind::MaxCut ? a > b : a < b;
}

double phase_drift(const CouplingMatrix& J, const PhaseState& phases, std::size_t i, double K,
                   double ks, int n_states) {
  if (J.size() != phases.size())
    throw DimensionError("phase state has " + std::to_string(phases.size()) +
                         " entries but the coupling matrix has " + std::to_string(J.size()) +
                         " oscillators");
  if (i >= phases.size())
    throw std::out_of_range("oscillator index " + std::to_string(i) + " out of range");
  return drift_from_snapshot(J, snapshot_of(phases.phases()), i, K, ks, n_states);
}

PhaseState euler_step(const PhaseState& phases, const CouplingMatrix& J,
                      const SolverParams& params, double t, const NoiseSource& noise,
                      std::uint64_t step_index) {
  if (J.size() != phases.size())
    throw DimensionError("phase state has " + std::to_string(phases.size()) +
                         " entries but the coupling matrix has " + std::to_string(J.size()) +
                         " oscillators");
  if (!(params.h > 0.0)) throw std::invalid_argument("h must be positive");
  const Snapshot cur = snapshot_of(phases.phases());
  Snapshot next(phases.size());
  const Stepper stepper(J, params, noise);
  const double ks = ks_at(params.schedule(), t);
  const std::size_t bad = stepper.update_range(cur, next, 0, phases.size(), ks, step_index);
  if (bad != Stepper::npos) throw NumericalError(bad, step_index);
  return PhaseState(std::move(next.phase));
}

RunResult run(const CouplingMatrix& J, const SolverParams& params, ProblemKind kind) {
  params.validate();
  const std::size_t n = J.size();
  if (n == 0) throw std::invalid_argument("cannot simulate an empty problem");
  if (kind == ProblemKind::MaxCut && params.n_states != 2)
    throw std::invalid_argument("max-cut runs need n_states = 2");

  const auto started = std::chrono::steady_clock::now();
  const NoiseSource noise(params.seed);
  const KsSchedule schedule = params.schedule();
  const Stepper stepper(J, params, noise);

  Snapshot cur(n);
  Snapshot next(n);
  std::vector<double> spare(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) cur.set(i, noise.initial_phase(i));

  const std::size_t steps = params.step_count();
  const std::size_t stride = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(params.effective_trace_stride() / params.h)));
  const std::size_t batch = params.batch_size;
  const std::size_t batches = (n + batch - 1) / batch;
  const int workers = static_cast<int>(std::min(resolve_workers(params.workers), batches));

  RunResult result;
  result.seed = params.seed;
  result.best_objective = kind == ProblemKind::MaxCut ? -std::numeric_limits<double>::infinity()
                                                      : std::numeric_limits<double>::infinity();

  auto sample = [&](std::size_t done, double ks) {
    const PhaseState live(cur.phase);
    StateAssignment s = threshold_phases(live, params.n_states);
    const double value = objective_value(J, s, kind);
    if (improves(kind, value, result.best_objective)) {
      result.best_objective = value;
      result.best_assignment = std::move(s);
    }
    result.energy_trace.push_back(
        {static_cast<double>(done) * params.h, continuous_energy(J, live), ks,
         result.best_objective});
  };

  std::atomic<std::size_t> bad{Stepper::npos};
  std::size_t failed_step = 0;
  bool failed = false;

  auto advance_batch = [&](std::size_t b, std::size_t step, double ks) {
    const std::size_t begin = b * batch;
    const std::size_t end = std::min(n, begin + batch);
    const std::size_t first_bad =
        stepper.update_range(cur, next, begin, end, ks, step, spare.data());
    if (first_bad != Stepper::npos) atomic_min(bad, first_bad);
  };
  // Runs on one thread once every batch of `step` is written.
  auto finish_step = [&](std::size_t step) {
    std::swap(cur, next);
    if (bad.load() != Stepper::npos) {
      failed = true;
      failed_step = step;
      return;
    }
    const std::size_t done = step + 1;
    if (done % stride == 0 || done == steps)
      sample(done, ks_at(schedule, static_cast<double>(done) * params.h));
  };

  if (workers <= 1) {
    for (std::size_t step = 0; step < steps && !failed; ++step) {
      const double ks = ks_at(schedule, static_cast<double>(step) * params.h);
      for (std::size_t b = 0; b < batches; ++b) advance_batch(b, step, ks);
      finish_step(step);
    }
  } else {
#pragma omp parallel num_threads(workers)
    for (std::size_t step = 0; step < steps; ++step) {
      const double ks = ks_at(schedule, static_cast<double>(step) * params.h);
#pragma omp for schedule(static)
      for (std::size_t b = 0; b < batches; ++b) advance_batch(b, step, ks);
      // implicit barrier: `next` is complete
#pragma omp single
      finish_step(step);
      // implicit barrier after single; every thread sees `failed`
      if (failed) break;
    }
  }

  if (failed) throw NumericalError(bad.load(), failed_step);

  result.final_phases = PhaseState(cur.phase);
  result.steps_executed = steps;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::uint64_t replica_seed(std::uint64_t seed, std::size_t replica) {
  return seed + static_cast<std::uint64_t>(replica) * 0x9E3779B97F4A7C15ull;
}

RunResult run_replicas(const CouplingMatrix& J, const SolverParams& params, ProblemKind kind,
                       std::size_t replicas) {
  if (replicas == 0) throw std::invalid_argument("replicas must be at least 1");
  params.validate();
  if (replicas == 1) return run(J, params, kind);

  const std::size_t workers = resolve_workers(params.workers);
  std::vector<RunResult> results(replicas);
  std::vector<std::exception_ptr> errors(replicas);

  // Replicas are independent; with several workers they run side by side,
  // each integrating on a single thread.
  const int outer = static_cast<int>(std::min(workers, replicas));
#pragma omp parallel for schedule(dynamic) num_threads(outer)
  for (std::size_t r = 0; r < replicas; ++r) {
    SolverParams p = params;
    p.seed = replica_seed(params.seed, r);
    if (outer > 1) p.workers = 1;
    try {
      results[r] = run(J, p, kind);
      results[r].replica = r;
    } catch (...) {
      errors[r] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t best = 0;
  for (std::size_t r = 1; r < replicas; ++r)
    if (improves(kind, results[r].best_objective, results[best].best_objective)) best = r;
  return std::move(results[best]);
}

}  // namespace oim
