#include "oim/types.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace oim {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    if (e.u >= node_count_ || e.v >= node_count_)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") references a node outside [0," +
                                  std::to_string(node_count_) + ")");
    if (e.u == e.v) throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    const auto lo = static_cast<std::uint64_t>(std::min(e.u, e.v));
    const auto hi = static_cast<std::uint64_t>(std::max(e.u, e.v));
    if (!seen.insert((lo << 32) | hi).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
  }
}

double Graph::total_weight() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                         [](double acc, const Edge& e) { return acc + e.weight; });
}

PhaseState::PhaseState(std::vector<double> phases) : phases_(std::move(phases)) {
  for (std::size_t i = 0; i < phases_.size(); ++i) {
    const double p = phases_[i];
    if (!(p >= 0.0 && p < 1.0))
      throw std::invalid_argument("phase " + std::to_string(i) + " = " + std::to_string(p) +
                                  " is outside [0,1)");
  }
}

StateAssignment::StateAssignment(int n_states, std::vector<int> states)
    : n_states_(n_states), states_(std::move(states)) {
  if (n_states_ < 2) throw std::invalid_argument("n_states must be at least 2");
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] < 0 || states_[i] >= n_states_)
      throw std::invalid_argument("state " + std::to_string(states_[i]) + " of node " +
                                  std::to_string(i) + " is outside [0," +
                                  std::to_string(n_states_) + ")");
}

PhaseState StateAssignment::fixed_point_phases() const {
  std::vector<double> p(states_.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = static_cast<double>(states_[i]) / static_cast<double>(n_states_);
  return PhaseState(std::move(p));
}

}  // namespace oim
