#pragma once

#include <cstddef>

#include "oim/coupling.hpp"
#include "oim/types.hpp"

namespace oim {

/// -sum_{i<j} J_ij s_i s_j over Ising spins. Requires a two-state assignment.
double ising_energy(const CouplingMatrix& J, const StateAssignment& s);

/// -sum_{i<j} J_ij delta(s_i, s_j).
double potts_energy(const CouplingMatrix& J, const StateAssignment& s);

/// sum_{i<j} J_ij cos(2 pi (phi_i - phi_j)).
double continuous_energy(const CouplingMatrix& J, const PhaseState& phases);

/// Snaps every phase to the nearest of the n_states fixed points k/N by
/// circular distance. Ties go to the smaller k.
StateAssignment threshold_phases(const PhaseState& phases, int n_states);

/// Total weight of edges whose endpoints carry different spins.
double cut_value(const Graph& g, const StateAssignment& s);

struct ColoringScore {
  std::size_t conflicts = 0;
  /// 1 - conflicts/|E|; 1.0 for a graph without edges.
  double satisfied_fraction = 1.0;
};

ColoringScore coloring_conflicts(const Graph& g, const StateAssignment& s);

}  // namespace oim
