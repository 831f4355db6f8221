#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oim/coupling.hpp"
#include "oim/energy.hpp"
#include "support.hpp"

using namespace oim;
using oim::test::coupling_of;

TEST_CASE("graph rejects invalid edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1.0}, {1, 0, 2.0}}), std::invalid_argument);
  CHECK_NOTHROW(Graph(3, {}));
}

TEST_CASE("phase state and assignment ranges") {
  CHECK_THROWS(PhaseState({0.2, 1.0}));
  CHECK_THROWS(PhaseState({-0.1}));
  CHECK_THROWS(StateAssignment(3, {0, 3}));
  CHECK_THROWS(StateAssignment(1, {0}));
  CHECK(wrap_unit(-1e-18) == 0.0);
  CHECK(wrap_unit(1.25) == doctest::Approx(0.25));
  CHECK(wrap_unit(-0.1) == doctest::Approx(0.9));
}

TEST_CASE("coupling matrix symmetry and storage equivalence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = test::random_graph(rng, 12, 0.4, {-2.0, 0.5, 3.0});
    const auto sparse = coupling_of(g, StoragePolicy::Sparse);
    const auto dense = coupling_of(g, StoragePolicy::Dense);
    REQUIRE(sparse.storage() == StorageKind::Sparse);
    REQUIRE(dense.storage() == StorageKind::Dense);
    CHECK(sparse.nonzeros() == 2 * g.edge_count());
    CHECK(dense.nonzeros() == sparse.nonzeros());
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(sparse.at(i, i) == 0.0);
      for (std::size_t j = 0; j < 12; ++j) {
        CHECK(sparse.at(i, j) == sparse.at(j, i));
        CHECK(sparse.at(i, j) == dense.at(i, j));
      }
    }
    const auto round_trip = dense.with_storage(StorageKind::Sparse);
    CHECK(round_trip.pairs().size() == g.edge_count());
  }
}

TEST_CASE("coupling matrix picks storage by density") {
  CHECK(coupling_of(test::complete(6)).storage() == StorageKind::Dense);
  CHECK(coupling_of(test::path3()).storage() == StorageKind::Dense);  // 4/9 > 0.25
  std::vector<Edge> ring;
  for (std::size_t i = 0; i < 40; ++i) ring.push_back({i, (i + 1) % 40, 1.0});
  CHECK(coupling_of(Graph(40, ring)).storage() == StorageKind::Sparse);
}

TEST_CASE("coupling matrix rejects bad pairs") {
  const std::vector<CouplingEntry> self{{1, 1, 1.0}};
  CHECK_THROWS_AS(CouplingMatrix::from_pairs(3, self), std::invalid_argument);
  const std::vector<CouplingEntry> twice{{0, 1, 1.0}, {1, 0, 1.0}};
  CHECK_THROWS_AS(CouplingMatrix::from_pairs(3, twice), std::invalid_argument);
  const std::vector<CouplingEntry> outside{{0, 3, 1.0}};
  CHECK_THROWS_AS(CouplingMatrix::from_pairs(3, outside), std::invalid_argument);
}

TEST_CASE("ising_energy examples") {
  const auto J = coupling_of(test::triangle());
  CHECK(ising_energy(J, StateAssignment(2, {0, 0, 0})) == doctest::Approx(-3.0));
  CHECK(ising_energy(J, StateAssignment(2, {0, 0, 1})) == doctest::Approx(1.0));
  const auto empty = coupling_of(Graph(4, {}));
  CHECK(ising_energy(empty, StateAssignment(2, {0, 1, 1, 0})) == 0.0);
  CHECK_THROWS_AS(ising_energy(J, StateAssignment(2, {0, 1})), DimensionError);
  CHECK_THROWS_AS(ising_energy(J, StateAssignment(3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("potts_energy examples") {
  const auto J = coupling_of(test::triangle(-1.0));
  CHECK(potts_energy(J, StateAssignment(3, {0, 1, 2})) == doctest::Approx(0.0));
  CHECK(potts_energy(J, StateAssignment(3, {0, 0, 0})) == doctest::Approx(3.0));
  const auto edge = coupling_of(Graph(2, {{0, 1, -1.0}}));
  CHECK(potts_energy(edge, StateAssignment(3, {2, 2})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(potts_energy(J, StateAssignment(3, {0})), DimensionError);
}

TEST_CASE("continuous_energy examples") {
  const auto J = coupling_of(Graph(2, {{0, 1, 1.0}}));
  CHECK(continuous_energy(J, PhaseState({0.0, 0.5})) == doctest::Approx(-1.0));
  CHECK(continuous_energy(J, PhaseState({0.25, 0.25})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(continuous_energy(J, PhaseState({0.1})), DimensionError);
}

TEST_CASE("threshold_phases examples") {
  CHECK(threshold_phases(PhaseState({0.26}), 2)[0] == 1);
  CHECK(threshold_phases(PhaseState({0.90}), 2)[0] == 0);
  CHECK(threshold_phases(PhaseState({0.34}), 3)[0] == 1);
  // exact tie between 0 and 0.5 goes to the smaller state
  CHECK(threshold_phases(PhaseState({0.25}), 2)[0] == 0);
  CHECK_THROWS(threshold_phases(PhaseState({0.1}), 1));
}

TEST_CASE("cut_value examples") {
  const Graph tri = test::triangle();
  CHECK(cut_value(tri, StateAssignment(2, {0, 0, 1})) == 2.0);
  std::mt19937_64 rng(3);
  const Graph g = test::random_graph(rng, 9, 0.5, {1.0, -1.0, 2.5});
  CHECK(cut_value(g, StateAssignment(2, std::vector<int>(9, 1))) == 0.0);
  CHECK_THROWS_AS(cut_value(tri, StateAssignment(2, {0, 1})), DimensionError);
}

TEST_CASE("coloring_conflicts examples") {
  const Graph tri = test::triangle();
  auto s = coloring_conflicts(tri, StateAssignment(3, {0, 1, 2}));
  CHECK(s.conflicts == 0);
  CHECK(s.satisfied_fraction == 1.0);
  s = coloring_conflicts(tri, StateAssignment(3, {0, 0, 1}));
  CHECK(s.conflicts == 1);
  CHECK(s.satisfied_fraction == doctest::Approx(2.0 / 3.0));
  s = coloring_conflicts(test::star(4), StateAssignment(3, {0, 0, 0, 0, 0}));
  CHECK(s.conflicts == 4);
  CHECK(s.satisfied_fraction == 0.0);
  s = coloring_conflicts(Graph(3, {}), StateAssignment(3, {0, 0, 0}));
  CHECK(s.satisfied_fraction == 1.0);
  CHECK_THROWS_AS(coloring_conflicts(tri, StateAssignment(3, {0})), DimensionError);
}

TEST_CASE("continuous energy equals minus ising energy at fixed points (exhaustive)") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 2; n <= 10; ++n) {
    const Graph g = test::random_graph(rng, n, 0.5, {1.0, -1.0, 0.5, 2.0});
    const auto J = coupling_of(g);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      const StateAssignment s = test::nth_assignment(code, n, 2);
      const double cont = continuous_energy(J, s.fixed_point_phases());
      REQUIRE(cont == doctest::Approx(-ising_energy(J, s)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("cut value identity against the coupling") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = test::random_graph(rng, 9, 0.45, {1.0, -1.0, 3.0});
    const auto J = coupling_of(g);
    const StateAssignment s = test::random_assignment(rng, 9, 2);
    const double aligned = continuous_energy(J, s.fixed_point_phases());
    CHECK(cut_value(g, s) == doctest::Approx((g.total_weight() - aligned) / 2.0));
  }
}

TEST_CASE("energies are invariant under a simultaneous permutation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 8;
    const Graph g = test::random_graph(rng, n, 0.5, {1.0, -1.0, 2.0});
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> moved;
    for (const Edge& e : g.edges()) moved.push_back({perm[e.u], perm[e.v], e.weight});
    const Graph h(n, moved);

    const StateAssignment s = test::random_assignment(rng, n, 3);
    const StateAssignment s2 = test::random_assignment(rng, n, 2);
    const PhaseState p = test::random_phases(rng, n);
    std::vector<int> ps(n), ps2(n);
    std::vector<double> pp(n);
    for (std::size_t i = 0; i < n; ++i) {
      ps[perm[i]] = s[i];
      ps2[perm[i]] = s2[i];
      pp[perm[i]] = p[i];
    }
    const auto Jg = coupling_of(g);
    const auto Jh = coupling_of(h);
    CHECK(potts_energy(Jg, s) == doctest::Approx(potts_energy(Jh, StateAssignment(3, ps))));
    CHECK(ising_energy(Jg, s2) == doctest::Approx(ising_energy(Jh, StateAssignment(2, ps2))));
    CHECK(continuous_energy(Jg, p) == doctest::Approx(continuous_energy(Jh, PhaseState(pp))));
  }
}

TEST_CASE("global phase shift and cyclic relabeling") {
  std::mt19937_64 rng(9);
  for (int n_states = 2; n_states <= 5; ++n_states) {
    const Graph g = test::random_graph(rng, 10, 0.4, {1.0, -1.0});
    const auto J = coupling_of(g);
    const PhaseState p = test::random_phases(rng, 10);
    const StateAssignment s = test::random_assignment(rng, 10, n_states);
    for (int k = 1; k < n_states; ++k) {
      std::vector<double> shifted(10);
      std::vector<int> relabeled(10);
      for (std::size_t i = 0; i < 10; ++i) {
        shifted[i] = wrap_unit(p[i] + static_cast<double>(k) / n_states);
        relabeled[i] = (s[i] + k) % n_states;
      }
      CHECK(continuous_energy(J, PhaseState(shifted)) ==
            doctest::Approx(continuous_energy(J, p)).epsilon(1e-10));
      const StateAssignment r(n_states, relabeled);
      CHECK(potts_energy(J, r) == doctest::Approx(potts_energy(J, s)));
      CHECK(coloring_conflicts(g, r).conflicts == coloring_conflicts(g, s).conflicts);
    }
  }
}

TEST_CASE("threshold idempotence on fixed points") {
  std::mt19937_64 rng(4);
  for (int n_states = 2; n_states <= 7; ++n_states) {
    const StateAssignment s = test::random_assignment(rng, 50, n_states);
    CHECK(threshold_phases(s.fixed_point_phases(), n_states) == s);
  }
}

TEST_CASE("threshold picks the circularly nearest fixed point") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n_states = 2; n_states <= 6; ++n_states) {
    for (int k = 0; k < 500; ++k) {
      const double p = u(rng);
      const int got = threshold_phases(PhaseState({p}), n_states)[0];
      const double target = static_cast<double>(got) / n_states;
      const double d = std::min(std::abs(p - target), 1.0 - std::abs(p - target));
      REQUIRE(d <= 0.5 / n_states + 1e-12);
    }
  }
}

TEST_CASE("potts energy with unit repulsive couplings counts conflicts") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = test::random_graph(rng, 12, 0.3);
    std::vector<CouplingEntry> pairs;
    for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v, -1.0});
    const auto J = CouplingMatrix::from_pairs(12, pairs);
    const StateAssignment s = test::random_assignment(rng, 12, 3);
    CHECK(potts_energy(J, s) == doctest::Approx(coloring_conflicts(g, s).conflicts));
  }
}
