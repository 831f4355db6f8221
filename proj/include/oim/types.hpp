#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oim {

/// Raised when two objects that must describe the same oscillator set disagree in size.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph with 0-based node indices.
///
/// Construction validates the invariants: indices in range, no self-loops and
/// at most one edge per unordered pair. Edge order is preserved as given.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  double total_weight() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
};

/// Normalized oscillator phases, each kept in [0,1).
class PhaseState {
 public:
  PhaseState() = default;
  explicit PhaseState(std::vector<double> phases);

  std::size_t size() const { return phases_.size(); }
  std::span<const double> phases() const { return phases_; }
  double operator[](std::size_t i) const { return phases_[i]; }

 private:
  std::vector<double> phases_;
};

/// Discrete state per oscillator in {0, ..., n_states-1}.
///
/// With two states, state 0 is Ising spin +1 (phase 0) and state 1 is spin -1
/// (phase 0.5).
class StateAssignment {
 public:
  StateAssignment() = default;
  StateAssignment(int n_states, std::vector<int> states);

  int n_states() const { return n_states_; }
  std::size_t size() const { return states_.size(); }
  std::span<const int> states() const { return states_; }
  int operator[](std::size_t i) const { return states_[i]; }

  /// +1 for state 0, -1 for state 1. Only meaningful with two states.
  int spin(std::size_t i) const { return states_[i] == 0 ? 1 : -1; }

  /// Phases sitting exactly on the fixed points k/N of each state.
  PhaseState fixed_point_phases() const;

  friend bool operator==(const StateAssignment&, const StateAssignment&) = default;

 private:
  int n_states_ = 2;
  std::vector<int> states_;
};

/// What a run optimizes. Max-cut maximizes the cut weight; coloring
/// minimizes the number of monochromatic edges.
enum class ProblemKind { MaxCut, Coloring };

/// wrap(x) = x - floor(x), clamped so that rounding never yields exactly 1.
inline double wrap_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace oim
