#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chromadisc/coloring.hpp"
#include "chromadisc/graph.hpp"

namespace chromadisc {

struct InvariantCheck {
  std::string name;
  bool passed = false;
};

bool all_passed(const std::vector<InvariantCheck>& checks);

// A set X with |X| <= k + 1 whose closed neighbourhood sees every colour
// and which meets the requested class.
struct RainbowNbhdCertificate {
  VertexSet x;
  int p = 0;
  int k = 0;
  std::uint64_t covered = 0;  // colours of sigma on N[X]
  int touched_class = 0;
  std::vector<InvariantCheck> checks;
  bool valid() const { return all_passed(checks); }
};

// Follows the inductive construction on k = p - chi(G): recolour the
// requested class to the smallest free colours, recurse on the largest
// colour it received, then add one vertex bridging the two colourings.
// Throws CertificateFailure if a step that must succeed does not.
RainbowNbhdCertificate rainbow_closed_neighbourhood(const Graph& g, const ProperColoring& sigma,
                                                    int class_index);
// Same, with chi(G) supplied by the caller.
RainbowNbhdCertificate rainbow_closed_neighbourhood(const Graph& g, const ProperColoring& sigma,
                                                    int class_index, int chi);

// Recomputes the three invariants from X alone.
std::vector<InvariantCheck> check_rainbow_nbhd(const Graph& g, const ProperColoring& sigma,
                                               int class_index, VertexSet x, int k);

struct BoundedCoverCertificate {
  VertexSet x;
  VertexSet cover;  // N[X]
  ProperColoring cover_colouring;
  int k = 0;
  int s = 0;
  int bound = 0;  // (s - 1)(k + 1) + 1
  std::vector<InvariantCheck> checks;
  bool valid() const { return all_passed(checks); }
};

// N[X] for the set above, coloured with at most (s-1)(k+1) + 1 colours: the
// neighbourhood of each x in X gets its own s-1 colours and the vertices of
// X outside N(X) share one more.
BoundedCoverCertificate bounded_rainbow_cover(const Graph& g, const ProperColoring& sigma, int s);
BoundedCoverCertificate bounded_rainbow_cover(const Graph& g, const ProperColoring& sigma, int s,
                                              int chi);

struct PigeonholeVertex {
  int vertex = 0;
  int palette = 0;  // |sigma(N[v])|
  int p = 0;
  int k = 0;
  // palette * (k + 1) >= p
  bool meets_guarantee() const { return palette * (k + 1) >= p; }
};

PigeonholeVertex pigeonhole_vertex(const Graph& g, const ProperColoring& sigma);
PigeonholeVertex pigeonhole_vertex(const Graph& g, const ProperColoring& sigma, int chi);

struct ExtractionRound {
  int index = 0;
  int p = 0;    // p_i
  int chi = 0;  // chi(G_i)
  int k = 0;    // p_i - chi(G_i)
  int pivot = 0;
  int pivot_palette = 0;
  VertexSet extracted;  // J_i
  VertexSet remaining;  // V(G_{i+1})
};

struct RainbowISCertificate {
  VertexSet independent_set;
  double guarantee = 0.0;
  bool vacuous = false;  // guarantee <= 0
  std::vector<ExtractionRound> rounds;
  std::vector<InvariantCheck> checks;
  bool valid() const { return all_passed(checks); }
};

// Repeatedly keep the smallest remaining vertex and delete its neighbours
// and its colour class. Guarantee chi(G) / s.
RainbowISCertificate greedy_rainbow_independent_set(const Graph& g, const ProperColoring& sigma,
                                                    int s);

// Round-based extraction for graphs that are 1-locally s1- and 2-locally
// s2-colourable. Each round picks the vertex seeing the most colours,
// extracts a rainbow independent J from its closed neighbourhood, and
// deletes the colour classes of J together with N(J). The bookkeeping
// invariants are checked with exact chromatic numbers every round.
RainbowISCertificate iterative_rainbow_independent_set(const Graph& g, const ProperColoring& sigma,
                                                       int s1, int s2);

double iterative_guarantee(int p, int k, int s1, int s2);

}  // namespace chromadisc
