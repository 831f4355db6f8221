#include "oim/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace oim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid solver parameters: " + what);
}

}  // namespace

SolverParams SolverParams::defaults_for(std::size_t n, int n_states) {
  SolverParams p;
  p.n_states = n_states;
  p.t_stop = 100.0 * std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), 0.25);
  p.ks_period = p.t_stop / 10.0;
  return p;
}

void SolverParams::validate() const {
  require(std::isfinite(K) && K > 0.0, "K must be finite and positive");
  require(std::isfinite(ks_max) && ks_max >= 0.0, "ks_max must be finite and non-negative");
  require(std::isfinite(ks_period) && ks_period > 0.0, "ks_period must be positive");
  require(std::isfinite(kn) && kn >= 0.0, "kn must be finite and non-negative");
  require(std::isfinite(h) && h > 0.0, "h must be positive");
  require(std::isfinite(t_stop) && t_stop > 0.0, "t_stop must be positive");
  require(h < t_stop, "h must be smaller than t_stop");
  require(h < ks_period, "h must be smaller than ks_period");
  require(n_states >= 2, "n_states must be at least 2");
  require(batch_size > 0, "batch_size must be positive");
  require(std::isfinite(trace_stride) && trace_stride >= 0.0,
          "trace_stride must be non-negative");
}

std::size_t SolverParams::step_count() const {
  return static_cast<std::size_t>(std::ceil(t_stop / h - 1e-9));
}

std::size_t resolve_workers(std::size_t requested) {
  std::size_t w = requested;
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("OIM_MAX_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(cap, &end, 10);
    if (end != cap && v > 0) w = std::min(w, static_cast<std::size_t>(v));
  }
  return w;
}

}  // namespace oim
