#include <random>
#include <set>

#include "doctest.h"

#include "chromadisc/coloring.hpp"
#include "chromadisc/constructions.hpp"
#include "chromadisc/errors.hpp"
#include "oracles.hpp"

using namespace chromadisc;

TEST_CASE("proper colourings are stored canonically") {
  const ProperColoring a({VertexSet{3, 4}, VertexSet{0, 2}, VertexSet{1}});
  CHECK(a.as_lists() == std::vector<std::vector<int>>{{0, 2}, {1}, {3, 4}});
  CHECK(a.colour_of(3) == 2);
  CHECK(a == ProperColoring::from_colours(std::vector<int>{5, 1, 5, 0, 0}));
  CHECK(a.palette_size(VertexSet{0, 1, 2}) == 2);
  CHECK(a.is_rainbow(VertexSet{0, 1, 3}));
  CHECK_FALSE(a.is_rainbow(VertexSet{0, 2}));
  CHECK(a.is_proper_on(Graph(5, {{0, 1}, {2, 3}, {1, 4}})));
  CHECK_FALSE(a.is_proper_on(cycle_graph(5)));
  CHECK_FALSE(a.is_proper_on(complete_graph(5)));
  CHECK(a.is_partition_of(VertexSet::range(5)));
  CHECK_THROWS_AS(ProperColoring({VertexSet{0, 1}, VertexSet{1}}), DomainError);
}

TEST_CASE("chromatic and clique numbers match brute force") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 0.15 + 0.7 * (trial % 4) / 3.0, rng);
    const auto sol = solve_chromatic(g, g.vertices());
    CHECK(sol.chi == oracle::chi(g));
    CHECK(sol.colouring.size() == sol.chi);
    CHECK(sol.colouring.is_proper_on(g));
    CHECK(sol.colouring.is_partition_of(g.vertices()));
    CHECK(clique_number(g) == oracle::omega(g));
    CHECK(g.is_clique(maximum_clique(g, g.vertices())));
  }
}

TEST_CASE("chromatic numbers of named graphs") {
  CHECK(chromatic_number(Graph()) == 0);
  CHECK(chromatic_number(Graph(3)) == 1);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(cycle_graph(6)) == 2);
  CHECK(chromatic_number(petersen_graph()) == 3);
  CHECK(chromatic_number(mycielski(4).graph) == 4);
  CHECK(chromatic_number(mycielski(5).graph) == 5);
  CHECK(chromatic_number(dirac_join(cycle_graph(5), cycle_graph(5))) == 6);
  // K6 minus a perfect matching is the octahedron K_{2,2,2}.
  Graph octahedron = complete_graph(6);
  for (int i = 0; i < 3; ++i) octahedron.remove_edge(2 * i, 2 * i + 1);
  CHECK(clique_number(octahedron) == 3);
  CHECK(chromatic_number(octahedron) == 3);
  CHECK(is_k_colourable(cycle_graph(5), VertexSet{0, 1, 2, 3}, 2));
  CHECK_FALSE(is_k_colourable(cycle_graph(5), VertexSet::range(5), 2));
}

TEST_CASE("chromatic cache agrees with direct evaluation") {
  std::mt19937_64 rng(32);
  const Graph g = random_graph(24, 0.3, rng);  // above the dense-table limit
  ChromaticCache cache(g);
  for (int trial = 0; trial < 50; ++trial) {
    const VertexSet s(rng() & ((std::uint64_t{1} << 24) - 1));
    CHECK(cache.chromatic_number(s) == chromatic_number(g, s));
    CHECK(cache.chromatic_number(s) == chromatic_number(g, s));
  }
  const Graph small = petersen_graph();
  ChromaticCache dense(small);
  CHECK(dense.chromatic_number(small.vertices()) == 3);
}

TEST_CASE("proper partitions are counted exactly once") {
  const auto c5 = proper_partitions(cycle_graph(5), 3);
  CHECK(c5.size() == 5);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.4, rng);
    const int chi = oracle::chi(g);
    for (int p = 1; p <= n; ++p) {
      std::set<std::vector<std::vector<int>>> seen;
      const bool in_range = enumerate_proper_partitions(g, p, [&](const ProperColoring& sigma) {
        CHECK(sigma.size() == p);
        CHECK(sigma.is_proper_on(g));
        CHECK(sigma.is_partition_of(g.vertices()));
        seen.insert(sigma.as_lists());
        return true;
      });
      CHECK(in_range == (p >= chi));
      CHECK(static_cast<long>(seen.size()) == oracle::partition_count(g, p));
    }
  }
}

TEST_CASE("local chromatic number matches brute force") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, 0.5, rng);
    const auto res = local_chromatic(g);
    CHECK(res.psi == oracle::psi(g));
    CHECK(res.witness.is_proper_on(g));
    CHECK(res.witness.is_partition_of(g.vertices()));
    int worst = 0;
    for (int v = 0; v < n; ++v) {
      worst = std::max(worst, res.witness.palette_size(g.closed_neighbourhood(v)));
    }
    CHECK(worst == res.psi);
  }
  CHECK(local_chromatic_number(cycle_graph(5)) == 3);
  CHECK(local_chromatic_number(complete_graph(4)) == 4);
  CHECK_THROWS_AS(local_chromatic(Graph()), DomainError);
}

TEST_CASE("omega <= psi <= chi <= degeneracy + 1") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 9), 0.4, rng);
    const auto st = coloring_stats(g);
    CHECK(st.omega <= st.psi);
    CHECK(st.psi <= st.chi);
    CHECK(st.chi <= st.degeneracy + 1);
  }
  const auto groetzsch = coloring_stats(mycielski(4).graph);
  CHECK(groetzsch.omega == 2);
  CHECK(groetzsch.chi == 4);
}

TEST_CASE("critical subgraph extraction") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
    const Graph h = extract_critical_subgraph(g);
    const int chi = chromatic_number(g);
    CHECK(chromatic_number(h) == chi);
    for (int v = 0; v < h.order(); ++v) {
      CHECK(chromatic_number(h, h.vertices() - VertexSet::singleton(v)) == chi - 1);
    }
  }
  CHECK(critical_vertex_set(disjoint_union(cycle_graph(5), Graph(2))) == VertexSet::range(5));
}

TEST_CASE("random colour order yields an independent set") {
  const auto m = mycielski(4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const VertexSet i = random_order_independent_set(m.graph, m.canonical, seed);
    CHECK(m.graph.is_independent(i));
    CHECK_FALSE(i.empty());
  }
  CHECK(random_order_independent_set(m.graph, m.canonical, 7) ==
        random_order_independent_set(m.graph, m.canonical, 7));
}

TEST_CASE("greedy colourings") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
    const auto d = degeneracy(g);
    const ProperColoring c = greedy_degeneracy_coloring(g, d.ordering);
    CHECK(c.is_proper_on(g));
    CHECK(c.is_partition_of(g.vertices()));
    CHECK(c.size() <= d.value + 1);
    const ProperColoring part = greedy_colouring(g, VertexSet{0});
    CHECK(part.is_partition_of(VertexSet{0}));
  }
  CHECK_THROWS_AS(greedy_degeneracy_coloring(cycle_graph(3), std::vector<int>{0, 1}), DomainError);
  CHECK_THROWS_AS(greedy_degeneracy_coloring(cycle_graph(3), std::vector<int>{0, 1, 1}), DomainError);
  const ProperColoring c5 = colour_with_at_most(cycle_graph(5), VertexSet::range(5), 3);
  CHECK(c5.size() == 3);
  CHECK_THROWS_AS(colour_with_at_most(cycle_graph(5), VertexSet::range(5), 2), LocalityViolation);
}
