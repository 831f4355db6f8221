#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oim/integrator.hpp"
#include "oim/params.hpp"
#include "oim/problem_io.hpp"

namespace oim::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInput = 2, kNumerical = 3 };

/// Solver flags as given on the command line; unset fields fall back to the
/// size-scaled defaults.
struct ParamOverrides {
  std::optional<double> K;
  std::optional<double> ks_max;
  std::optional<double> ks_period;
  std::optional<double> kn;
  std::optional<double> h;
  std::optional<double> t_stop;
  std::optional<double> trace_stride;
  std::uint64_t seed = 0;
  std::size_t batch_size = 256;
  std::size_t workers = 0;
};

SolverParams resolve_params(const ParamOverrides& o, std::size_t n, int n_states);

/// Picks the parser by extension: `.col` is DIMACS, everything else G-set.
ProblemInstance load_instance(const std::string& path, ProblemKind kind, int n_states);

std::string_view to_string(ProblemKind kind);
ProblemKind parse_kind(const std::string& s);

struct RunReport {
  std::string instance;
  ProblemKind kind = ProblemKind::MaxCut;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  SolverParams params;
  double best_objective = 0.0;
  /// Coloring only.
  std::optional<double> satisfied_fraction;
  std::optional<double> reference;
  std::optional<double> accuracy_percent;
  double wall_time_s = 0.0;
  std::size_t steps = 0;
  std::size_t replicas = 1;
  std::size_t best_replica = 0;
  std::vector<int> assignment;
};

nlohmann::ordered_json to_json(const RunReport& r);

/// Runs run_replicas on the instance and fills a report. Accuracy is
/// 100 * cut / reference for max-cut and 100 * satisfied_fraction for
/// coloring, present only when a reference is given.
RunReport solve_instance(const ProblemInstance& instance, const SolverParams& params,
                         std::size_t replicas, std::optional<double> reference,
                         RunResult* result_out = nullptr);

/// CSV header `t,energy,ks,best_objective` followed by one row per sample.
void write_trace_csv(std::ostream& out, const RunResult& result);

struct SweepCell {
  double K = 0.0;
  double ks_max = 0.0;
  double accuracy = 0.0;
};

/// Evaluates a K x ks_max grid. Trial t of every cell uses seed base + t, so
/// cells are compared on the same seeds.
std::vector<SweepCell> sweep(const ProblemInstance& instance, const ParamOverrides& base,
                             double k_lo, double k_hi, std::size_t k_steps, double ks_lo,
                             double ks_hi, std::size_t ks_steps, std::size_t trials,
                             std::size_t replicas, double reference);

struct ScalingRow {
  std::size_t n = 0;
  std::size_t workers = 1;
  double wall_time_s = 0.0;
};

/// Times a fixed number of steps on dense G(n, density) instances with one
/// worker and with `multi_workers`. Each time is the minimum over `repeats`.
std::vector<ScalingRow> scaling(const std::vector<std::size_t>& sizes, std::size_t steps,
                                double density, std::size_t multi_workers, std::size_t repeats,
                                std::uint64_t seed);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oim::cli
