#include <random>

#include "doctest.h"

#include "chromadisc/ball_coloring.hpp"
#include "chromadisc/coloring.hpp"
#include "chromadisc/constructions.hpp"
#include "chromadisc/errors.hpp"

using namespace chromadisc;

namespace {

void check_ball_colouring(const Graph& g, const BallColoring& bc) {
  const BallView view = ball(g, bc.center, bc.radius);
  CHECK(bc.ball == view.ball);
  for (int v = 0; v < g.order(); ++v) {
    const int c = bc.colours[static_cast<std::size_t>(v)];
    if (!view.ball.contains(v)) {
      CHECK(c == 0);
      continue;
    }
    CHECK(c >= 1);
    CHECK(c <= 2 * bc.ell);
    for (int u : g.neighbours(v) & view.ball) CHECK(bc.colours[static_cast<std::size_t>(u)] != c);
  }
  for (std::size_t r = 0; r < view.shells.size(); ++r) {
    const auto [lo, hi] = r % 2 == 0 ? bc.even_palette : bc.odd_palette;
    for (int v : view.shells[r]) {
      CHECK(bc.colours[static_cast<std::size_t>(v)] >= lo);
      CHECK(bc.colours[static_cast<std::size_t>(v)] <= hi);
    }
  }
  CHECK(bc.colours_used() <= 2 * bc.ell);
}

Graph tree(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
  return g;
}

void check_theta(const Graph& g, const ThetaWitness& w, int k) {
  const int len = static_cast<int>(w.cycle.size());
  CHECK(len >= 2 * k);
  CHECK(VertexSet::from(w.cycle).size() == len);
  for (int i = 0; i < len; ++i) CHECK(g.adjacent(w.cycle[i], w.cycle[(i + 1) % len]));
  CHECK(g.adjacent(w.chord.first, w.chord.second));
  const auto a = std::find(w.cycle.begin(), w.cycle.end(), w.chord.first) - w.cycle.begin();
  const auto b = std::find(w.cycle.begin(), w.cycle.end(), w.chord.second) - w.cycle.begin();
  REQUIRE(a < len);
  REQUIRE(b < len);
  const auto gap = std::abs(a - b);
  CHECK(gap != 1);
  CHECK(gap != len - 1);
}

}  // namespace

TEST_CASE("colour_ball examples") {
  SUBCASE("triangle-free, ell = 2") {
    const auto m = mycielski(4);
    for (int v = 0; v < m.graph.order(); ++v) {
      const auto bc = colour_ball(m.graph, v, 2);
      CHECK(bc.radius == 1);
      check_ball_colouring(m.graph, bc);
    }
  }
  SUBCASE("Petersen, ell = 6") {
    const Graph p = petersen_graph();
    for (int v = 0; v < 10; ++v) {
      const auto bc = colour_ball(p, v, 6);
      CHECK(bc.radius == 3);
      CHECK(bc.ball == p.vertices());
      check_ball_colouring(p, bc);
    }
  }
  SUBCASE("nine-cycle, ell = 4") {
    const Graph c9 = cycle_graph(9);
    const auto bc = colour_ball(c9, 0, 4);
    CHECK(bc.ball == VertexSet{0, 1, 2, 7, 8});
    check_ball_colouring(c9, bc);
    // Shell 2 = {2, 7} is independent; both get the first even colour.
    CHECK(bc.colours[2] == 1);
    CHECK(bc.colours[7] == 1);
  }
  SUBCASE("refusal returns the forbidden cycle") {
    try {
      colour_ball(petersen_graph(), 0, 4);
      FAIL("expected CycleRefusal");
    } catch (const CycleRefusal& e) {
      CHECK(e.cycle().size() == 5);
    }
    CHECK_THROWS_AS(colour_ball(cycle_graph(5), 0, 1), DomainError);
  }
}

TEST_CASE("layer degeneracy examples") {
  std::mt19937_64 rng(71);
  SUBCASE("C4-free graphs have forest neighbourhoods") {
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_cycle_free_graph(12, 3, 0.7, rng);
      for (int v = 0; v < g.order(); ++v) {
        const auto report = layer_degeneracy_report(g, v, 3);
        REQUIRE(report.size() == 1);
        CHECK(report[0].r == 1);
        CHECK(report[0].degeneracy <= 1);
      }
    }
  }
  SUBCASE("Petersen") {
    for (const auto& layer : layer_degeneracy_report(petersen_graph(), 0, 6)) {
      CHECK(layer.degeneracy <= 5);
    }
  }
  SUBCASE("trees have edgeless layers") {
    for (int trial = 0; trial < 20; ++trial) {
      const Graph t = tree(15, rng);
      for (int ell = 2; ell <= 6; ++ell) {
        for (const auto& layer : layer_degeneracy_report(t, 0, ell)) CHECK(layer.degeneracy == 0);
      }
    }
  }
  SUBCASE("refusal") {
    CHECK_THROWS_AS(layer_degeneracy_report(complete_graph(4), 0, 3), CycleRefusal);
  }
  CHECK(layer_degeneracy_bound(5) == 4);
}

TEST_CASE("layer bounds and ball colourings on random cycle-free graphs") {
  std::mt19937_64 rng(72);
  for (int ell = 2; ell <= 7; ++ell) {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 6 + static_cast<int>(rng() % 11);
      const Graph g = random_cycle_free_graph(n, ell, 0.3 + 0.1 * (trial % 6), rng);
      // Odd ell forbids an even cycle C_{2t+2} (bound 2t), even ell an odd
      // cycle C_{2t+1} (bound 2t-1); both equal ell - 1.
      const int t = ell / 2;
      const int bound = ell % 2 == 1 ? 2 * t : 2 * t - 1;
      REQUIRE(bound == layer_degeneracy_bound(ell));
      for (int v = 0; v < n; ++v) {
        for (const auto& layer : layer_degeneracy_report(g, v, ell)) CHECK(layer.degeneracy <= bound);
        const auto bc = colour_ball(g, v, ell);
        check_ball_colouring(g, bc);
        CHECK(chromatic_number(g, bc.ball) <= 2 * ell);
      }
    }
  }
}

TEST_CASE("theta search") {
  SUBCASE("six-cycle with a chord") {
    Graph g = cycle_graph(6);
    g.add_edge(0, 3);
    const auto w = find_theta_subgraph(g, 3);
    REQUIRE(w);
    check_theta(g, *w, 3);
    CHECK(w->is_bipartite());
    Graph odd_chord = cycle_graph(6);
    odd_chord.add_edge(0, 2);
    CHECK(find_theta_subgraph(odd_chord, 3).has_value());
    CHECK_FALSE(find_theta_subgraph(odd_chord, 3, true).has_value());
  }
  SUBCASE("K4 has no long cycle") { CHECK_FALSE(find_theta_subgraph(complete_graph(4), 3)); }
  SUBCASE("K33 contains a bipartite theta") {
    const Graph k33 = complete_bipartite(3, 3);
    const auto w = find_theta_subgraph(k33, 3, true);
    REQUIRE(w);
    check_theta(k33, *w, 3);
    CHECK(w->is_bipartite());
  }
  SUBCASE("cycles alone are not thetas") {
    CHECK_FALSE(find_theta_subgraph(cycle_graph(10), 3));
    CHECK_FALSE(find_theta_subgraph(petersen_graph(), 6));
    CHECK(find_theta_subgraph(petersen_graph(), 3));
  }
  SUBCASE("argument checks") {
    CHECK_THROWS_AS(find_theta_subgraph(cycle_graph(6), 2), DomainError);
    CHECK_THROWS_AS(find_theta_subgraph(Graph(21), 3), LimitExceeded);
  }
}

TEST_CASE("bipartite min-degree theta property on the minimum-degree threshold") {
  // Bipartite graphs with minimum degree >= k contain a Theta_k.
  for (int k = 3; k <= 4; ++k) {
    const auto w = find_theta_subgraph(complete_bipartite(k, k), k, true);
    REQUIRE(w);
    check_theta(complete_bipartite(k, k), *w, k);
  }
}

TEST_CASE("layers of C_{2k}-free graphs contain no bipartite theta") {
  std::mt19937_64 rng(73);
  for (int k = 3; k <= 4; ++k) {
    const int ell = 2 * k - 1;
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = random_cycle_free_graph(16, ell, 0.6, rng);
      REQUIRE_FALSE(has_cycle_of_length(g, 2 * k));
      for (int v = 0; v < g.order(); ++v) {
        const BallView view = ball(g, v, k - 1);
        for (std::size_t r = 1; r < view.shells.size(); ++r) {
          const Graph layer = induced_subgraph(g, view.shells[r]);
          CHECK_FALSE(find_theta_subgraph(layer, k, true).has_value());
        }
      }
    }
  }
}

TEST_CASE("bipartite subgraph of large minimum degree") {
  auto check = [](const Graph& g, int want) {
    const auto b = bipartite_min_degree_subgraph(g);
    CHECK_FALSE(b.left.intersects(b.right));
    CHECK((b.left | b.right) == b.kept);
    CHECK(b.flips <= g.edge_count());
    CHECK(b.peeled <= g.order());
    for (auto [u, v] : b.subgraph.edges()) CHECK(b.left.contains(u) != b.left.contains(v));
    REQUIRE_FALSE(b.kept.empty());
    for (int v : b.kept) CHECK(b.subgraph.degree(v) >= want);
    return b;
  };
  const auto c4 = check(cycle_graph(4), 2);
  CHECK(c4.kept == VertexSet::range(4));
  CHECK(c4.subgraph == cycle_graph(4));
  const auto k4 = check(complete_graph(4), 2);
  CHECK(k4.subgraph.edge_count() == 4);
  check(complete_graph(7), 3);
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(12, 0.7, rng);
    const int t = (g.min_degree() - 1) / 2;
    if (t < 1) continue;
    check(g, t + 1);
  }
}
