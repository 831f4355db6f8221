#include "oim/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "oim/energy.hpp"

namespace oim {

namespace {

struct Neighbor {
  std::size_t node;
  double weight;
};

std::vector<std::vector<Neighbor>> adjacency(const Graph& g) {
  std::vector<std::vector<Neighbor>> adj(g.node_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  return adj;
}

}  // namespace

MaxCutOptimum exact_maxcut(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > kMaxCutOracleNodes)
    throw std::invalid_argument("exact_maxcut is capped at " + std::to_string(kMaxCutOracleNodes) +
                                " nodes, graph has " + std::to_string(n));
  if (n <= 1) return {0.0, StateAssignment(2, std::vector<int>(n, 0))};

  // Walk the 2^(n-1) assignments with node 0 on side 0 in Gray-code order,
  // updating the cut by the flipped node's incident edges. Node i maps to bit
  // n-1-i so that comparing codes numerically compares assignments
  // lexicographically.
  const auto adj = adjacency(g);
  const std::size_t free_nodes = n - 1;
  const std::uint64_t count = std::uint64_t{1} << free_nodes;
  double scale = 1.0;
  for (const Edge& e : g.edges()) scale += std::abs(e.weight);
  const double tie_eps = 1e-9 * scale;

  std::vector<int> side(n, 0);
  double cut = 0.0;
  double best = 0.0;
  std::uint64_t best_code = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int bit = std::countr_zero(k);
    const std::size_t node = n - 1 - static_cast<std::size_t>(bit);
    for (const Neighbor& nb : adj[node])
      cut += side[node] == side[nb.node] ? nb.weight : -nb.weight;
    side[node] ^= 1;
    const std::uint64_t code = k ^ (k >> 1);
    if (cut > best + tie_eps || (std::abs(cut - best) <= tie_eps && code < best_code)) {
      best = cut;
      best_code = code;
    }
  }

  std::vector<int> states(n, 0);
  for (std::size_t i = 1; i < n; ++i) states[i] = static_cast<int>((best_code >> (n - 1 - i)) & 1);
  StateAssignment witness(2, std::move(states));
  const double exact = cut_value(g, witness);
  return {exact, std::move(witness)};
}

ColoringOptimum exact_min_conflicts(const Graph& g, int n_states) {
  if (n_states < 2) throw std::invalid_argument("n_states must be at least 2");
  const std::size_t n = g.node_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(n_states);
    if (total > kColoringOracleCap)
      throw std::invalid_argument("exact_min_conflicts is capped at 2^24 assignments; " +
                                  std::to_string(n_states) + "^" + std::to_string(n) +
                                  " exceeds it");
  }
  if (n == 0) return {0, StateAssignment(n_states, {})};

  const auto adj = adjacency(g);
  std::vector<int> color(n, 0);
  auto recolor = [&](std::size_t node, int to, long long& conflicts) {
    for (const Neighbor& nb : adj[node]) {
      if (color[nb.node] == color[node]) --conflicts;
      if (color[nb.node] == to) ++conflicts;
    }
    color[node] = to;
  };

  long long conflicts = static_cast<long long>(g.edge_count());
  long long best = conflicts;
  std::vector<int> best_color = color;
  // Odometer over nodes 1..n-1, last node fastest: lexicographic order.
  while (best > 0) {
    std::size_t pos = n - 1;
    while (pos > 0 && color[pos] == n_states - 1) {
      recolor(pos, 0, conflicts);
      --pos;
    }
    if (pos == 0) break;
    recolor(pos, color[pos] + 1, conflicts);
    if (conflicts < best) {
      best = conflicts;
      best_color = color;
    }
  }
  return {static_cast<std::size_t>(best), StateAssignment(n_states, std::move(best_color))};
}

}  // namespace oim
