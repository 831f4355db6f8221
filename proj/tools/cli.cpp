#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "oim/energy.hpp"
#include "oim/oracle.hpp"

namespace oim::cli {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad number for " + what + ": '" + s + "'");
  return v;
}

/// Parses "lo:hi" (or a single value meaning lo = hi).
std::pair<double, double> parse_range(const std::string& s, const std::string& what) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) {
    const double v = to_double(parts[0], what);
    return {v, v};
  }
  if (parts.size() != 2) throw std::invalid_argument(what + " must be 'lo:hi'");
  return {to_double(parts[0], what), to_double(parts[1], what)};
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  std::vector<double> v(steps);
  for (std::size_t k = 0; k < steps; ++k)
    v[k] = steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
  return v;
}

/// Shared solver flags for every subcommand that runs the integrator.
void add_param_flags(CLI::App& app, ParamOverrides& o) {
  app.add_option("--K", o.K, "global coupling strength");
  app.add_option("--ks-max", o.ks_max, "peak injection-locking strength");
  app.add_option("--ks-period", o.ks_period, "simulated time per Ks triangle (default t_stop/10)");
  app.add_option("--kn", o.kn, "noise strength");
  app.add_option("--h", o.h, "Euler time step");
  app.add_option("--t-stop", o.t_stop, "total simulated time (default 100 * n^0.25)");
  app.add_option("--trace-stride", o.trace_stride,
                 "simulated time between best-so-far samples (default ks_period/2)");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--batch-size", o.batch_size, "oscillators per work batch")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "worker threads, 0 = all available");
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& text) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps an exception to the exit-code contract and prints it.
int report_error(std::ostream& err, std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const NumericalError& ex) {
    err << "error: " << ex.what() << '\n';
    return kNumerical;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInput;
  } catch (const InputError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInput;
  }
}

struct ManifestRow {
  std::size_t line = 0;
  std::string path;
  std::string kind;
  std::optional<double> reference;
  std::vector<std::pair<std::string, std::string>> overrides;
};

std::vector<ManifestRow> parse_manifest(const std::string& text) {
  std::vector<ManifestRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split(t, ',');
    if (fields[0] == "path") continue;  // header
    if (fields.size() < 2)
      throw InputError("manifest line " + std::to_string(line_no) +
                       ": expected 'path,kind,reference'");
    ManifestRow row;
    row.line = line_no;
    row.path = fields[0];
    row.kind = fields[1];
    if (fields.size() > 2 && !fields[2].empty())
      row.reference = to_double(fields[2], "reference on manifest line " + std::to_string(line_no));
    for (std::size_t k = 3; k < fields.size(); ++k) {
      if (fields[k].empty()) continue;
      const auto eq = fields[k].find('=');
      if (eq == std::string::npos)
        throw InputError("manifest line " + std::to_string(line_no) + ": override '" + fields[k] +
                         "' is not key=value");
      row.overrides.emplace_back(trim(fields[k].substr(0, eq)), trim(fields[k].substr(eq + 1)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_solve(const std::string& path, const std::string& problem, std::optional<int> colors,
              const ParamOverrides& o, std::size_t replicas, std::optional<double> reference,
              const std::string& trace_path, const std::string& out_path, std::ostream& out) {
  const ProblemKind kind = parse_kind(problem);
  if (kind == ProblemKind::MaxCut && colors)
    throw std::invalid_argument("--colors only applies to --problem coloring");
  const int n_states = kind == ProblemKind::MaxCut ? 2 : colors.value_or(3);
  const ProblemInstance instance = load_instance(path, kind, n_states);
  const SolverParams params = resolve_params(o, instance.graph.node_count(), n_states);
  RunResult result;
  const RunReport report = solve_instance(instance, params, replicas, reference, &result);
  write_output(out_path, out, to_json(report).dump(2) + "\n");
  if (!trace_path.empty()) {
    std::ostringstream csv;
    write_trace_csv(csv, result);
    write_output(trace_path, out, csv.str());
  }
  return kOk;
}

void apply_override(ParamOverrides& o, std::size_t& replicas, int& colors, const std::string& key,
                    const std::string& value) {
  const double v = to_double(value, key);
  if (key == "K") o.K = v;
  else if (key == "ks_max") o.ks_max = v;
  else if (key == "ks_period") o.ks_period = v;
  else if (key == "kn") o.kn = v;
  else if (key == "h") o.h = v;
  else if (key == "t_stop") o.t_stop = v;
  else if (key == "seed") o.seed = static_cast<std::uint64_t>(v);
  else if (key == "replicas") replicas = static_cast<std::size_t>(v);
  else if (key == "colors") colors = static_cast<int>(v);
  else throw std::invalid_argument("unknown override '" + key + "'");
}

int cmd_bench(const std::string& manifest_path, const ParamOverrides& shared,
              std::size_t shared_replicas, int shared_colors, const std::string& format,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(manifest_path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto rows = parse_manifest(text);
  const auto base_dir = std::filesystem::path(manifest_path).parent_path();

  nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "instance,problem,nodes,edges,best_objective,reference,accuracy_percent,wall_time_s,"
         "steps,seed,replicas,status,error\n";
  std::size_t failed = 0;
  double total_time = 0.0;
  double acc_sum = 0.0;
  std::size_t acc_count = 0;
  double acc_min = std::numeric_limits<double>::infinity();

  for (const ManifestRow& row : rows) {
    std::filesystem::path p(row.path);
    if (p.is_relative()) p = base_dir / p;
    try {
      ParamOverrides o = shared;
      std::size_t replicas = shared_replicas;
      int colors = shared_colors;
      for (const auto& [k, v] : row.overrides) apply_override(o, replicas, colors, k, v);
      const ProblemKind kind = parse_kind(row.kind);
      const int n_states = kind == ProblemKind::MaxCut ? 2 : colors;
      const ProblemInstance instance = load_instance(p.string(), kind, n_states);
      const SolverParams params = resolve_params(o, instance.graph.node_count(), n_states);
      const RunReport r = solve_instance(instance, params, replicas, row.reference);
      total_time += r.wall_time_s;
      if (r.accuracy_percent) {
        acc_sum += *r.accuracy_percent;
        acc_min = std::min(acc_min, *r.accuracy_percent);
        ++acc_count;
      }
      auto j = to_json(r);
      j["status"] = "ok";
      json_rows.push_back(j);
      csv << r.instance << ',' << to_string(r.kind) << ',' << r.nodes << ',' << r.edges << ','
          << fmt_double(r.best_objective) << ','
          << (r.reference ? fmt_double(*r.reference) : "") << ','
          << (r.accuracy_percent ? fmt_double(*r.accuracy_percent) : "") << ','
          << fmt_double(r.wall_time_s) << ',' << r.steps << ',' << r.params.seed << ','
          << r.replicas << ",ok,\n";
    } catch (const std::exception& e) {
      ++failed;
      std::string msg = e.what();
      std::replace(msg.begin(), msg.end(), ',', ';');
      err << "row " << row.line << " (" << row.path << ") failed: " << e.what() << '\n';
      json_rows.push_back({{"instance", p.filename().string()},
                           {"problem", row.kind},
                           {"status", "failed"},
                           {"error", e.what()}});
      csv << p.filename().string() << ',' << row.kind << ",,,,"
          << (row.reference ? fmt_double(*row.reference) : "") << ",,,,,,failed," << msg << '\n';
    }
  }

  nlohmann::ordered_json summary;
  summary["rows"] = rows.size();
  summary["failed"] = failed;
  summary["min_accuracy_percent"] = acc_count ? nlohmann::ordered_json(acc_min) : nullptr;
  summary["mean_accuracy_percent"] =
      acc_count ? nlohmann::ordered_json(acc_sum / static_cast<double>(acc_count)) : nullptr;
  summary["total_wall_time_s"] = total_time;

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["rows"] = json_rows;
    doc["summary"] = summary;
    write_output(out_path, out, doc.dump(2) + "\n");
  } else {
    csv << "# rows=" << rows.size() << " failed=" << failed
        << " min_accuracy_percent=" << (acc_count ? fmt_double(acc_min) : "")
        << " mean_accuracy_percent="
        << (acc_count ? fmt_double(acc_sum / static_cast<double>(acc_count)) : "")
        << " total_wall_time_s=" << fmt_double(total_time) << '\n';
    write_output(out_path, out, csv.str());
  }
  return failed > 0 ? kInput : kOk;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  return kind == ProblemKind::MaxCut ? "maxcut" : "coloring";
}

ProblemKind parse_kind(const std::string& s) {
  if (s == "maxcut") return ProblemKind::MaxCut;
  if (s == "coloring") return ProblemKind::Coloring;
  throw std::invalid_argument("unknown problem kind '" + s + "' (expected maxcut or coloring)");
}

SolverParams resolve_params(const ParamOverrides& o, std::size_t n, int n_states) {
  SolverParams p = SolverParams::defaults_for(n, n_states);
  if (o.t_stop) {
    p.t_stop = *o.t_stop;
    p.ks_period = p.t_stop / 10.0;
  }
  if (o.K) p.K = *o.K;
  if (o.ks_max) p.ks_max = *o.ks_max;
  if (o.ks_period) p.ks_period = *o.ks_period;
  if (o.kn) p.kn = *o.kn;
  if (o.h) p.h = *o.h;
  if (o.trace_stride) p.trace_stride = *o.trace_stride;
  p.seed = o.seed;
  p.batch_size = o.batch_size;
  p.workers = o.workers;
  p.validate();
  return p;
}

ProblemInstance load_instance(const std::string& path, ProblemKind kind, int n_states) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const bool dimacs = std::filesystem::path(path).extension() == ".col";
  Graph g = dimacs ? parse_dimacs_col(text) : parse_gset(text);
  return ProblemInstance(std::move(g), kind, n_states,
                         std::filesystem::path(path).filename().string());
}

nlohmann::ordered_json to_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["instance"] = r.instance;
  j["problem"] = std::string(to_string(r.kind));
  j["n_states"] = r.params.n_states;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  ordered_json p;
  p["K"] = r.params.K;
  p["ks_max"] = r.params.ks_max;
  p["ks_period"] = r.params.ks_period;
  p["kn"] = r.params.kn;
  p["h"] = r.params.h;
  p["t_stop"] = r.params.t_stop;
  p["trace_stride"] = r.params.effective_trace_stride();
  p["seed"] = r.params.seed;
  p["batch_size"] = r.params.batch_size;
  j["params"] = p;
  j["best_objective"] = r.best_objective;
  j["satisfied_fraction"] = r.satisfied_fraction ? ordered_json(*r.satisfied_fraction) : nullptr;
  j["reference"] = r.reference ? ordered_json(*r.reference) : nullptr;
  j["accuracy_percent"] = r.accuracy_percent ? ordered_json(*r.accuracy_percent) : nullptr;
  j["wall_time_s"] = r.wall_time_s;
  j["steps"] = r.steps;
  j["seed"] = r.params.seed;
  j["replicas"] = r.replicas;
  j["best_replica"] = r.best_replica;
  j["assignment"] = r.assignment;
  return j;
}

RunReport solve_instance(const ProblemInstance& instance, const SolverParams& params,
                         std::size_t replicas, std::optional<double> reference,
                         RunResult* result_out) {
  const CouplingMatrix J = build_coupling(instance);
  SolverParams p = params;
  p.n_states = instance.n_states;

  const auto started = std::chrono::steady_clock::now();
  RunResult result = run_replicas(J, p, instance.kind, replicas);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  RunReport r;
  r.instance = instance.source_name;
  r.kind = instance.kind;
  r.nodes = instance.graph.node_count();
  r.edges = instance.graph.edge_count();
  r.params = p;
  r.replicas = replicas;
  r.best_replica = result.replica;
  r.steps = result.steps_executed;
  r.wall_time_s = elapsed;
  r.assignment.assign(result.best_assignment.states().begin(),
                      result.best_assignment.states().end());
  if (instance.kind == ProblemKind::MaxCut) {
    r.best_objective = cut_value(instance.graph, result.best_assignment);
  } else {
    const ColoringScore score = coloring_conflicts(instance.graph, result.best_assignment);
    r.best_objective = static_cast<double>(score.conflicts);
    r.satisfied_fraction = score.satisfied_fraction;
  }
  if (reference) {
    r.reference = reference;
    r.accuracy_percent = instance.kind == ProblemKind::MaxCut
                             ? 100.0 * r.best_objective / *reference
                             : 100.0 * *r.satisfied_fraction;
  }
  if (result_out) *result_out = std::move(result);
  return r;
}

void write_trace_csv(std::ostream& out, const RunResult& result) {
  out << "t,energy,ks,best_objective\n";
  for (const TraceSample& s : result.energy_trace)
    out << fmt_double(s.t) << ',' << fmt_double(s.energy) << ',' << fmt_double(s.ks) << ','
        << fmt_double(s.best_objective) << '\n';
}

std::vector<SweepCell> sweep(const ProblemInstance& instance, const ParamOverrides& base,
                             double k_lo, double k_hi, std::size_t k_steps, double ks_lo,
                             double ks_hi, std::size_t ks_steps, std::size_t trials,
                             std::size_t replicas, double reference) {
  if (k_steps == 0 || ks_steps == 0 || trials == 0)
    throw std::invalid_argument("sweep grid and trial counts must be positive");
  if (k_hi < k_lo || ks_hi < ks_lo) throw std::invalid_argument("empty sweep range");
  if (instance.kind == ProblemKind::MaxCut && !(reference > 0.0))
    throw std::invalid_argument("max-cut sweeps need a positive reference cut");

  std::vector<SweepCell> cells;
  for (const double K : linspace(k_lo, k_hi, k_steps)) {
    for (const double ks : linspace(ks_lo, ks_hi, ks_steps)) {
      ParamOverrides o = base;
      o.K = K;
      o.ks_max = ks;
      double acc = 0.0;
      for (std::size_t t = 0; t < trials; ++t) {
        o.seed = base.seed + t;
        const SolverParams p = resolve_params(o, instance.graph.node_count(), instance.n_states);
        const RunReport r = solve_instance(instance, p, replicas, reference);
        acc += *r.accuracy_percent;
      }
      cells.push_back({K, ks, acc / static_cast<double>(trials)});
    }
  }
  return cells;
}

std::vector<ScalingRow> scaling(const std::vector<std::size_t>& sizes, std::size_t steps,
                                double density, std::size_t multi_workers, std::size_t repeats,
                                std::uint64_t seed) {
  if (steps == 0 || repeats == 0) throw std::invalid_argument("steps and repeats must be positive");
  const std::size_t multi = resolve_workers(multi_workers);
  std::vector<ScalingRow> rows;
  for (const std::size_t n : sizes) {
    if (n < 2) throw std::invalid_argument("scaling sizes must be at least 2");
    const Graph g = generate_random_graph(n, density, seed + n);
    const CouplingMatrix J = build_maxcut_coupling(g, StoragePolicy::Dense);
    SolverParams p;
    p.h = 0.01;
    p.t_stop = p.h * static_cast<double>(steps);
    p.ks_period = p.t_stop / 2;
    p.seed = seed;
    p.trace_stride = p.t_stop;
    p.batch_size = std::max<std::size_t>(1, (n + 4 * multi - 1) / (4 * multi));
    for (const std::size_t w : {std::size_t{1}, multi}) {
      p.workers = w;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < repeats; ++r) {
        const auto started = std::chrono::steady_clock::now();
        (void)run(J, p, ProblemKind::MaxCut);
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                            started)
                                  .count());
      }
      rows.push_back({n, w, best});
    }
  }
  return rows;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulated oscillator Ising/Potts machine for max-cut and graph coloring"};
  app.require_subcommand(1);
  // `--h` is the Euler step, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one G-set or DIMACS instance");
  std::string solve_path;
  std::string problem = "maxcut";
  std::optional<int> colors;
  ParamOverrides solve_o;
  std::size_t solve_replicas = 1;
  std::optional<double> solve_ref;
  std::string trace_path;
  std::string solve_out;
  solve->add_option("file", solve_path, "instance file (.col = DIMACS, otherwise G-set)")
      ->required();
  solve->add_option("--problem", problem, "maxcut or coloring")
      ->check(CLI::IsMember({"maxcut", "coloring"}));
  solve->add_option("--colors", colors, "number of colors for coloring (default 3)")
      ->check(CLI::Range(2, 1 << 20));
  add_param_flags(*solve, solve_o);
  solve->add_option("--replicas", solve_replicas, "independent restarts")
      ->check(CLI::PositiveNumber);
  solve->add_option("--reference", solve_ref, "reference objective for the accuracy column");
  solve->add_option("--trace", trace_path, "write the energy trace CSV here");
  solve->add_option("--out", solve_out, "write the JSON report here instead of stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "run every instance of a manifest");
  std::string manifest;
  ParamOverrides bench_o;
  std::size_t bench_replicas = 1;
  int bench_colors = 3;
  std::string bench_format = "csv";
  std::string bench_out;
  bench->add_option("manifest", manifest, "CSV manifest: path,kind,reference[,key=value...]")
      ->required();
  add_param_flags(*bench, bench_o);
  bench->add_option("--replicas", bench_replicas, "independent restarts per row")
      ->check(CLI::PositiveNumber);
  bench->add_option("--colors", bench_colors, "colors for coloring rows")->check(CLI::Range(2, 1 << 20));
  bench->add_option("--format", bench_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_out, "output file (default stdout)");

  // sweep
  auto* sw = app.add_subcommand("sweep", "accuracy over a K x ks_max grid");
  std::string sweep_path;
  std::string sweep_problem = "maxcut";
  int sweep_colors = 3;
  ParamOverrides sweep_o;
  std::string k_range = "0.5:2";
  std::string ks_range = "0:4";
  std::size_t k_steps = 4;
  std::size_t ks_steps = 5;
  std::size_t trials = 1;
  std::size_t sweep_replicas = 1;
  std::optional<double> sweep_ref;
  std::string sweep_out;
  sw->add_option("file", sweep_path, "instance file")->required();
  sw->add_option("--problem", sweep_problem, "maxcut or coloring")
      ->check(CLI::IsMember({"maxcut", "coloring"}));
  sw->add_option("--colors", sweep_colors, "colors for coloring")->check(CLI::Range(2, 1 << 20));
  add_param_flags(*sw, sweep_o);
  sw->add_option("--K-range", k_range, "K values lo:hi");
  sw->add_option("--ks-range", ks_range, "ks_max values lo:hi");
  sw->add_option("--K-steps", k_steps, "grid points along K");
  sw->add_option("--ks-steps", ks_steps, "grid points along ks_max");
  sw->add_option("--trials", trials, "seeds per cell (seed, seed+1, ...)");
  sw->add_option("--replicas", sweep_replicas, "restarts per trial")->check(CLI::PositiveNumber);
  sw->add_option("--reference", sweep_ref,
                 "reference cut (default: exact optimum for graphs up to 24 nodes)");
  sw->add_option("--out", sweep_out, "output CSV (default stdout)");

  // scaling
  auto* sc = app.add_subcommand("scaling", "wall time vs problem size, one and many workers");
  std::string sizes_arg = "100,200,400";
  std::size_t sc_steps = 200;
  double density = 0.5;
  std::size_t sc_workers = 0;
  std::size_t sc_repeats = 1;
  std::uint64_t sc_seed = 1;
  std::string sc_out;
  sc->add_option("--sizes", sizes_arg, "comma-separated node counts");
  sc->add_option("--steps", sc_steps, "Euler steps per timed run");
  sc->add_option("--density", density, "edge probability")->check(CLI::Range(0.0, 1.0));
  sc->add_option("--workers", sc_workers, "multi-worker thread count, 0 = all available");
  sc->add_option("--replicas", sc_repeats, "timed repetitions; the minimum is reported")
      ->check(CLI::PositiveNumber);
  sc->add_option("--seed", sc_seed, "instance seed");
  sc->add_option("--out", sc_out, "output CSV (default stdout)");

  // generate
  auto* gen = app.add_subcommand("generate", "write a planted N-colorable graph in G-set format");
  std::size_t gen_n = 0;
  std::size_t gen_m = 0;
  int gen_colors = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--nodes", gen_n, "node count")->required();
  gen->add_option("--edges", gen_m, "edge count")->required();
  gen->add_option("--colors", gen_colors, "planted colors")->check(CLI::Range(2, 1 << 20));
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed())
      return cmd_solve(solve_path, problem, colors, solve_o, solve_replicas, solve_ref, trace_path,
                       solve_out, out);
    if (bench->parsed())
      return cmd_bench(manifest, bench_o, bench_replicas, bench_colors, bench_format, bench_out,
                       out, err);
    if (sw->parsed()) {
      const ProblemKind kind = parse_kind(sweep_problem);
      const int n_states = kind == ProblemKind::MaxCut ? 2 : sweep_colors;
      const ProblemInstance instance = load_instance(sweep_path, kind, n_states);
      double reference = sweep_ref.value_or(0.0);
      if (!sweep_ref && kind == ProblemKind::MaxCut) {
        if (instance.graph.node_count() > kMaxCutOracleNodes)
          throw std::invalid_argument("--reference is required above " +
                                      std::to_string(kMaxCutOracleNodes) + " nodes");
        reference = exact_maxcut(instance.graph).best_cut;
      }
      const auto [k_lo, k_hi] = parse_range(k_range, "--K-range");
      const auto [ks_lo, ks_hi] = parse_range(ks_range, "--ks-range");
      const auto cells = sweep(instance, sweep_o, k_lo, k_hi, k_steps, ks_lo, ks_hi, ks_steps,
                               trials, sweep_replicas, reference);
      std::ostringstream csv;
      csv << "K,ks_max,accuracy\n";
      for (const SweepCell& c : cells)
        csv << fmt_double(c.K) << ',' << fmt_double(c.ks_max) << ',' << fmt_double(c.accuracy)
            << '\n';
      write_output(sweep_out, out, csv.str());
      return kOk;
    }
    if (sc->parsed()) {
      std::vector<std::size_t> sizes;
      for (const std::string& s : split(sizes_arg, ','))
        sizes.push_back(static_cast<std::size_t>(to_double(s, "--sizes")));
      if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
      const auto rows = scaling(sizes, sc_steps, density, sc_workers, sc_repeats, sc_seed);
      std::ostringstream csv;
      csv << "n,workers,wall_time_s\n";
      for (const ScalingRow& r : rows)
        csv << r.n << ',' << r.workers << ',' << fmt_double(r.wall_time_s) << '\n';
      write_output(sc_out, out, csv.str());
      return kOk;
    }
    if (gen->parsed()) {
      const Graph g = generate_colorable_graph(gen_n, gen_m, gen_colors, gen_seed);
      std::ostringstream text;
      write_gset(text, g);
      write_output(gen_out, out, text.str());
      return kOk;
    }
  } catch (...) {
    return report_error(err, std::current_exception());
  }
  return kUsage;
}

}  // namespace oim::cli
