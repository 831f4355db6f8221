#include "oim/energy.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace oim {

namespace {

void require_same_size(std::size_t coupling_n, std::size_t other, const char* what) {
  if (coupling_n != other)
    throw DimensionError(std::string(what) + " has " + std::to_string(other) +
                         " entries but the coupling matrix has " + std::to_string(coupling_n) +
                         " oscillators");
}

void require_covers(const Graph& g, const StateAssignment& s) {
  if (g.node_count() != s.size())
    throw DimensionError("assignment has " + std::to_string(s.size()) +
                         " entries but the graph has " + std::to_string(g.node_count()) +
                         " nodes");
}

}  // namespace

double ising_energy(const CouplingMatrix& J, const StateAssignment& s) {
  require_same_size(J.size(), s.size(), "assignment");
  if (s.n_states() != 2)
    throw std::invalid_argument("ising_energy needs a two-state assignment, got " +
                                std::to_string(s.n_states()) + " states");
  double e = 0.0;
  for (std::size_t i = 0; i < J.size(); ++i)
    J.for_each_in_row(i, [&](std::size_t j, double w) {
      if (i < j) e -= w * s.spin(i) * s.spin(j);
    });
  return e;
}

double potts_energy(const CouplingMatrix& J, const StateAssignment& s) {
  require_same_size(J.size(), s.size(), "assignment");
  double e = 0.0;
  for (std::size_t i = 0; i < J.size(); ++i)
    J.for_each_in_row(i, [&](std::size_t j, double w) {
      if (i < j && s[i] == s[j]) e -= w;
    });
  return e;
}

double continuous_energy(const CouplingMatrix& J, const PhaseState& phases) {
  require_same_size(J.size(), phases.size(), "phase state");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double e = 0.0;
  for (std::size_t i = 0; i < J.size(); ++i)
    J.for_each_in_row(i, [&](std::size_t j, double w) {
      if (i < j) e += w * std::cos(two_pi * (phases[i] - phases[j]));
    });
  return e;
}

StateAssignment threshold_phases(const PhaseState& phases, int n_states) {
  if (n_states < 2) throw std::invalid_argument("n_states must be at least 2");
  const double n = static_cast<double>(n_states);
  std::vector<int> states(phases.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    int best = 0;
    double best_dist = 2.0;
    for (int k = 0; k < n_states; ++k) {
      const double d = std::abs(phases[i] - k / n);
      const double circular = std::min(d, 1.0 - d);
      if (circular < best_dist) {
        best_dist = circular;
        best = k;
      }
    }
    states[i] = best;
  }
  return StateAssignment(n_states, std::move(states));
}

double cut_value(const Graph& g, const StateAssignment& s) {
  require_covers(g, s);
  if (s.n_states() != 2)
    throw std::invalid_argument("cut_value needs a two-state assignment");
  double cut = 0.0;
  for (const Edge& e : g.edges())
    if (s[e.u] != s[e.v]) cut += e.weight;
  return cut;
}

ColoringScore coloring_conflicts(const Graph& g, const StateAssignment& s) {
  require_covers(g, s);
  ColoringScore score;
  for (const Edge& e : g.edges())
    if (s[e.u] == s[e.v]) ++score.conflicts;
  if (g.edge_count() > 0)
    score.satisfied_fraction =
        1.0 - static_cast<double>(score.conflicts) / static_cast<double>(g.edge_count());
  return score;
}

}  // namespace oim
