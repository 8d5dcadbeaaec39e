#include <random>

#include "doctest.h"

#include "chromadisc/constructions.hpp"
#include "chromadisc/discrepancy.hpp"
#include "chromadisc/errors.hpp"
#include "oracles.hpp"

using namespace chromadisc;

namespace {

std::vector<int> colour_vector(const ProperColoring& sigma, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = sigma.colour_of(v);
  return out;
}

}  // namespace

TEST_CASE("discrepancy of a colouring equals the induced-subgraph definition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 0.5, rng);
    const auto chis = oracle::chi_table(g);
    for (int p = chromatic_number(g); p <= n; ++p) {
      for (const auto& sigma : proper_partitions(g, p)) {
        const auto colour = colour_vector(sigma, n);
        const RainbowWitness w = discrepancy_of_coloring(g, sigma);
        CHECK(w.value == oracle::phi_sigma(chis, colour));
        CHECK(sigma.is_rainbow(w.vertices));
        CHECK(w.value == w.vertices.size() - chromatic_number(g, w.vertices));
        ChromaticCache cache(g);
        CHECK(naive_colouring_discrepancy(cache, sigma) == w.value);
        const RainbowWitness cover = min_rainbow_cover_chromatic(g, sigma);
        CHECK(cover.vertices.size() == p);
        CHECK(sigma.is_rainbow(cover.vertices));
        CHECK(cover.value == chromatic_number(g, cover.vertices));
        CHECK(p - cover.value == w.value);
      }
    }
  }
}

TEST_CASE("exact discrepancy agrees with brute force on all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_labeled_graphs(n, [&](const Graph& g) {
      const DiscrepancyResult r = chromatic_discrepancy(g);
      CHECK(r.phi == oracle::phi(g));
      return true;
    });
  }
}

TEST_CASE("exact discrepancy agrees with brute force on sampled 6-vertex graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(6, 0.5, rng);
    CHECK(chromatic_discrepancy(g).phi == oracle::phi(g));
  }
}

TEST_CASE("f values agree with brute force") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, 0.5, rng);
    for (int p = chromatic_number(g); p <= n; ++p) {
      const FValueResult f = f_value(g, p);
      CHECK(f.f == oracle::f_value(g, p));
      CHECK(f.witness_coloring.size() == p);
      CHECK(f.witness_cover.size() == p);
      CHECK(chromatic_number(g, f.witness_cover) == f.f);
    }
  }
  CHECK(f_value(cycle_graph(5), 3).f == 2);
  CHECK(f_value(cycle_graph(5), 3).witness_coloring.is_proper_on(cycle_graph(5)));
}

TEST_CASE("named discrepancies") {
  CHECK(chromatic_discrepancy(cycle_graph(5)).phi == 1);
  CHECK(chromatic_discrepancy(complete_graph(5)).phi == 0);
  CHECK(chromatic_discrepancy(Graph(4)).phi == 0);
  CHECK(chromatic_discrepancy(complete_bipartite(3, 3)).phi == 0);
  CHECK(chromatic_discrepancy(mycielski(4).graph).phi == 2);
  CHECK(naive_chromatic_discrepancy(cycle_graph(5)) == 1);
  CHECK_THROWS_AS(chromatic_discrepancy(Graph()), DomainError);
}

TEST_CASE("discrepancy witnesses are self-consistent") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 8), 0.5, rng);
    const DiscrepancyResult r = chromatic_discrepancy(g);
    const int chi = chromatic_number(g);
    CHECK(r.phi >= 0);
    CHECK(r.phi <= chi - 1);
    CHECK(r.witness_coloring.is_proper_on(g));
    CHECK(r.witness_coloring.is_partition_of(g.vertices()));
    CHECK(r.witness_coloring.size() == r.p);
    CHECK(r.k == r.p - chi);
    CHECK(r.witness_coloring.is_rainbow(r.witness_set));
    CHECK(r.witness_set.size() == r.p);
    CHECK(chromatic_number(g, r.witness_set) == r.f);
    CHECK(r.phi == r.p - r.f);
    CHECK(discrepancy_of_coloring(g, r.witness_coloring).value == r.phi);
    // The optimum is always attained below 2 chi.
    CHECK(r.p < 2 * chi);
  }
}
