#pragma once

#include "chromadisc/coloring.hpp"
#include "chromadisc/graph.hpp"

namespace chromadisc {

// A set together with the value it witnesses: for a rainbow set X this is
// either |X| - chi(G[X]) or chi(G[X]) depending on the query.
struct RainbowWitness {
  int value = 0;
  VertexSet vertices;
};

struct DiscrepancyResult {
  int phi = 0;
  int p = 0;  // colours of the witness colouring
  int f = 0;  // chi of the witness cover
  int k = 0;  // p - chi(G)
  ProperColoring witness_coloring;
  VertexSet witness_set;
};

struct FValueResult {
  int p = 0;
  int f = 0;
  ProperColoring witness_coloring;
  VertexSet witness_cover;
};

// max over sigma-rainbow X of |X| - chi(G[X]), by branch-and-bound over
// partial transversals (a class may be skipped).
RainbowWitness discrepancy_of_coloring(const Graph& g, const ProperColoring& sigma);
RainbowWitness discrepancy_of_coloring(ChromaticCache& cache, const ProperColoring& sigma);

// min chi(G[X]) over rainbow covers X of sigma. With stop_at > 0 the search
// returns as soon as it finds a cover with chi <= stop_at; the value is
// exact whenever it is larger than stop_at.
RainbowWitness min_rainbow_cover_chromatic(const Graph& g, const ProperColoring& sigma);
RainbowWitness min_rainbow_cover_chromatic(ChromaticCache& cache, const ProperColoring& sigma,
                                           int stop_at = 0);

FValueResult f_value(const Graph& g, int p);
FValueResult f_value(ChromaticCache& cache, int p);

// phi(G) = min over chi <= p <= n of p - f_G(p), with witnesses.
DiscrepancyResult chromatic_discrepancy(const Graph& g);

// Straight from the definition: every induced subgraph, every partition.
// Exponential in n twice over; only used to re-check rare findings.
int naive_colouring_discrepancy(ChromaticCache& cache, const ProperColoring& sigma);
int naive_chromatic_discrepancy(const Graph& g);

}  // namespace chromadisc
