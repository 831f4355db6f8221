#pragma once

// Shared fixtures and generators for the test binaries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oim/coupling.hpp"
#include "oim/types.hpp"

namespace oim::test {

inline Graph triangle(double w = 1.0) { return Graph(3, {{0, 1, w}, {1, 2, w}, {0, 2, w}}); }

inline Graph path3() { return Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({u, v, 1.0});
  return Graph(n, std::move(e));
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v <= leaves; ++v) e.push_back({0, v, 1.0});
  return Graph(leaves + 1, std::move(e));
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1.0});      // outer cycle
    e.push_back({i, i + 5, 1.0});            // spokes
    e.push_back({i + 5, (i + 2) % 5 + 5, 1.0});  // inner pentagram
  }
  return Graph(10, std::move(e));
}

/// G(n, p) with weights drawn from `weights` uniformly.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p,
                          const std::vector<double>& weights = {1.0}) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng) < p) e.push_back({u, v, weights[pick(rng)]});
  return Graph(n, std::move(e));
}

inline CouplingMatrix coupling_of(const Graph& g, StoragePolicy policy = StoragePolicy::Auto) {
  std::vector<CouplingEntry> pairs;
  for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v, e.weight});
  return CouplingMatrix::from_pairs(g.node_count(), pairs, policy);
}

inline StateAssignment random_assignment(std::mt19937_64& rng, std::size_t n, int n_states) {
  std::uniform_int_distribution<int> d(0, n_states - 1);
  std::vector<int> s(n);
  for (int& x : s) x = d(rng);
  return StateAssignment(n_states, std::move(s));
}

inline PhaseState random_phases(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  std::vector<double> p(n);
  for (double& x : p) x = d(rng);
  return PhaseState(std::move(p));
}

/// Assignment number `code` in base n_states, node 0 most significant.
inline StateAssignment nth_assignment(std::uint64_t code, std::size_t n, int n_states) {
  std::vector<int> s(n);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<int>(code % static_cast<std::uint64_t>(n_states));
    code /= static_cast<std::uint64_t>(n_states);
  }
  return StateAssignment(n_states, std::move(s));
}

inline std::string fixture(const std::string& name) {
  return std::string(OIM_FIXTURE_DIR) + "/" + name;
}

}  // namespace oim::test
