#pragma once

#include <cstddef>

#include "oim/types.hpp"

namespace oim {

inline constexpr std::size_t kMaxCutOracleNodes = 24;
/// N^n must not exceed this many assignments.
inline constexpr std::size_t kColoringOracleCap = std::size_t{1} << 24;

struct MaxCutOptimum {
  double best_cut = 0.0;
  StateAssignment witness;
};

/// Exhaustive max-cut over the 2^(n-1) bipartitions with node 0 on side 0.
/// The witness is the lexicographically smallest optimal assignment.
MaxCutOptimum exact_maxcut(const Graph& g);

struct ColoringOptimum {
  std::size_t min_conflicts = 0;
  StateAssignment witness;
};

/// Exhaustive minimum-conflict coloring with node 0 fixed to color 0.
/// The witness is the lexicographically smallest optimal assignment.
ColoringOptimum exact_min_conflicts(const Graph& g, int n_states);

}  // namespace oim
