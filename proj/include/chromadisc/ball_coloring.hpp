#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc {

// A cycle of length >= 2k together with a chord between two
// non-consecutive cycle vertices.
struct ThetaWitness {
  std::vector<int> cycle;
  Edge chord;
  // Even cycle and a chord joining positions at odd distance.
  bool is_bipartite() const;
};

struct BallColoring {
  int center = 0;
  int radius = 0;
  int ell = 0;
  // colours[v] in 1..2*ell for v in the ball, 0 outside.
  std::vector<int> colours;
  // Even shells use 1..ell, odd shells ell+1..2*ell.
  std::pair<int, int> even_palette;
  std::pair<int, int> odd_palette;
  VertexSet ball;
  int colours_used() const;
};

// Layer degeneracy bound for C_{ell+1}-free graphs and layers up to
// radius floor(ell/2).
inline int layer_degeneracy_bound(int ell) { return ell - 1; }

// Colours B_t(v), t = floor(ell/2), layer by layer with parity-split
// palettes. Throws CycleRefusal if g contains C_{ell+1} and
// CertificateFailure if a layer is too degenerate.
BallColoring colour_ball(const Graph& g, int v, int ell);

struct LayerDegeneracy {
  int r = 0;
  int degeneracy = 0;
};

// Degeneracy of L_r(v) for r = 1..floor(ell/2). Throws CycleRefusal if g
// contains C_{ell+1}.
std::vector<LayerDegeneracy> layer_degeneracy_report(const Graph& g, int v, int ell);

inline constexpr int kMaxThetaOrder = 20;

// Exhaustive search for a Theta_k subgraph (restricted to bipartite ones if
// requested). Throws DomainError for k < 3 and LimitExceeded above 20
// vertices.
std::optional<ThetaWitness> find_theta_subgraph(const Graph& g, int k, bool bipartite_only = false);

struct BipartiteSubgraph {
  VertexSet left;
  VertexSet right;
  VertexSet kept;   // vertices surviving the peeling
  Graph subgraph;   // cut edges among kept vertices, on the original ids
  int flips = 0;
  int peeled = 0;
};

// Locally maximal cut from the parity-of-id cut, then peel vertices whose
// cross-degree falls below ceil(min_degree / 2).
BipartiteSubgraph bipartite_min_degree_subgraph(const Graph& g);

}  // namespace chromadisc
