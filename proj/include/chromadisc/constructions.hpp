#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "chromadisc/coloring.hpp"
#include "chromadisc/graph.hpp"

namespace chromadisc {

// A graph with its distinguished colouring. `labels[v]` keeps the
// construction's own 1-based colour names (the canonical ProperColoring
// renames colours by smallest vertex).
struct ColoredConstruction {
  Graph graph;
  ProperColoring canonical;
  std::vector<int> labels;
  int k = 0;
  int s = 0;
};

// Originals keep ids 0..n-1, the twin of v is n+v, the apex is 2n.
Graph mycielskian(const Graph& g);

// M_k with twins inheriting their original's colour and the apex coloured k.
ColoredConstruction mycielski(int k);

// Myc(k, s): K_s for k = s, otherwise the Mycielskian of Myc(k-1, s); twins
// receive the new colour k and the apex colour s.
ColoredConstruction generalized_mycielski(int k, int s);

Graph dirac_join(const Graph& g1, const Graph& g2);

struct TightnessGadget {
  Graph graph;
  ProperColoring colouring;
};

// gPrime plus k isolated vertices, each with its own new colour on top of an
// optimal colouring of gPrime.
TightnessGadget lemma34_tightness_gadget(const Graph& g_prime, int k);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& part_sizes);
Graph petersen_graph();
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Random graph with no cycle of length ell + 1: candidate edges are visited
// in random order and each is kept with probability `density` unless it
// would close a forbidden cycle.
Graph random_cycle_free_graph(int n, int ell, double density, std::mt19937_64& rng);

// G(n, q) sample.
Graph random_graph(int n, double q, std::mt19937_64& rng);

}  // namespace chromadisc
