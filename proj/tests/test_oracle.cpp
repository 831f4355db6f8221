#include <doctest.h>

#include <random>

#include "oim/energy.hpp"
#include "oim/oracle.hpp"
#include "oim/problem_io.hpp"
#include "support.hpp"

using namespace oim;

namespace {

// Plain enumeration over every assignment, used to cross-check the oracles.
double naive_maxcut(const Graph& g) {
  const std::size_t n = g.node_count();
  double best = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code)
    best = std::max(best, cut_value(g, test::nth_assignment(code, n, 2)));
  return best;
}

std::size_t naive_min_conflicts(const Graph& g, int n_states) {
  const std::size_t n = g.node_count();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n_states);
  std::size_t best = g.edge_count();
  for (std::uint64_t code = 0; code < total; ++code)
    best = std::min(best, coloring_conflicts(g, test::nth_assignment(code, n, n_states)).conflicts);
  return best;
}

}  // namespace

TEST_CASE("exact_maxcut examples") {
  CHECK(exact_maxcut(test::triangle()).best_cut == 2.0);

  const MaxCutOptimum p3 = exact_maxcut(test::path3());
  CHECK(p3.best_cut == 2.0);
  CHECK(p3.witness == StateAssignment(2, {0, 1, 0}));

  const Graph petersen = parse_gset(read_file(test::fixture("petersen.gset")));
  CHECK(naive_maxcut(petersen) == 12.0);
  CHECK(exact_maxcut(petersen).best_cut == 12.0);
}

TEST_CASE("exact_maxcut edge cases") {
  CHECK(exact_maxcut(Graph(1, {})).best_cut == 0.0);
  CHECK(exact_maxcut(Graph(5, {})).witness == StateAssignment(2, {0, 0, 0, 0, 0}));
  // all-negative weights: cutting nothing is optimal
  CHECK(exact_maxcut(test::triangle(-1.0)).best_cut == 0.0);
  CHECK_THROWS_AS(exact_maxcut(Graph(25, {})), std::invalid_argument);
  CHECK(exact_maxcut(test::star(23)).best_cut == 23.0);
}

TEST_CASE("exact_maxcut agrees with naive enumeration") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = test::random_graph(rng, n, 0.5, {1.0, -1.0, 2.5});
    const MaxCutOptimum opt = exact_maxcut(g);
    CAPTURE(trial);
    CHECK(opt.best_cut == doctest::Approx(naive_maxcut(g)));
    CHECK(cut_value(g, opt.witness) == opt.best_cut);
    CHECK(opt.witness[0] == 0);
    for (int k = 0; k < 20; ++k)
      CHECK(opt.best_cut >= cut_value(g, test::random_assignment(rng, n, 2)));
  }
}

TEST_CASE("exact_maxcut witness is the lexicographically smallest optimum") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const Graph g = test::random_graph(rng, n, 0.6);
    const MaxCutOptimum opt = exact_maxcut(g);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const StateAssignment s = test::nth_assignment(code, n, 2);
      if (cut_value(g, s) == opt.best_cut) {
        CHECK(s == opt.witness);
        break;
      }
    }
  }
}

TEST_CASE("exact_min_conflicts examples") {
  CHECK(exact_min_conflicts(test::triangle(), 3).min_conflicts == 0);
  CHECK(exact_min_conflicts(test::complete(4), 3).min_conflicts == 1);
  CHECK(exact_min_conflicts(test::triangle(), 2).min_conflicts == 1);
  CHECK(exact_min_conflicts(test::petersen(), 3).min_conflicts == 0);
  CHECK(exact_min_conflicts(test::petersen(), 2).min_conflicts == 3);
}

TEST_CASE("exact_min_conflicts caps and errors") {
  CHECK_THROWS_AS(exact_min_conflicts(Graph(16, {}), 3), std::invalid_argument);
  CHECK_THROWS_AS(exact_min_conflicts(test::triangle(), 1), std::invalid_argument);
  CHECK(exact_min_conflicts(Graph(24, {}), 2).min_conflicts == 0);
}

TEST_CASE("exact_min_conflicts agrees with naive enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int N = 2 + trial % 3;
    const std::size_t n = 3 + trial % (N == 4 ? 5 : 7);
    const Graph g = test::random_graph(rng, n, 0.55);
    const ColoringOptimum opt = exact_min_conflicts(g, N);
    CAPTURE(trial);
    CHECK(opt.min_conflicts == naive_min_conflicts(g, N));
    CHECK(coloring_conflicts(g, opt.witness).conflicts == opt.min_conflicts);
    CHECK(opt.witness[0] == 0);
  }
}

TEST_CASE("exact_min_conflicts witness is the lexicographically smallest optimum") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 4 + trial % 5;
    const Graph g = test::random_graph(rng, n, 0.7);
    const ColoringOptimum opt = exact_min_conflicts(g, 3);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      const StateAssignment s = test::nth_assignment(code, n, 3);
      if (coloring_conflicts(g, s).conflicts == opt.min_conflicts) {
        CHECK(s == opt.witness);
        break;
      }
    }
  }
}
