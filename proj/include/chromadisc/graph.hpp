#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromadisc/vertex_set.hpp"

namespace chromadisc {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, n <= 64, with one adjacency
// word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  bool empty() const { return n_ == 0; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbours(int v) const { return adj_[v]; }
  VertexSet closed_neighbourhood(int v) const { return adj_[v] | VertexSet::singleton(v); }
  // Union of N(v) over v in S (may intersect S).
  VertexSet neighbours(VertexSet s) const;
  VertexSet closed_neighbourhood(VertexSet s) const { return neighbours(s) | s; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  int degree(int v) const { return adj_[v].size(); }
  int degree_in(int v, VertexSet s) const { return (adj_[v] & s).size(); }
  int edge_count() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<Edge> edges() const;

  bool is_independent(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_connected() const;
  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Relabels S to 0..|S|-1 preserving ascending order.
Graph induced_subgraph(const Graph& g, VertexSet s);

struct Degeneracy {
  int value = 0;
  // Peeling order: ordering[0] is removed first.
  std::vector<int> ordering;
};

// Min-degree peeling restricted to S (ties broken by smallest id).
Degeneracy degeneracy(const Graph& g, VertexSet s);
inline Degeneracy degeneracy(const Graph& g) { return degeneracy(g, g.vertices()); }

// Shortest-path distances from v; -1 for unreachable vertices.
std::array<int, kMaxVertices> bfs_distances(const Graph& g, int v);

struct BallView {
  int center = 0;
  int radius = 0;
  // shells[i] = vertices at distance exactly i from the center.
  std::vector<VertexSet> shells;
  VertexSet ball;
};

BallView ball(const Graph& g, int v, int r);

// Cycle with exactly `length` vertices, as a vertex sequence whose
// consecutive entries (and last/first) are adjacent.
std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int length);
bool has_cycle_of_length(const Graph& g, int length);

// True if g has a u-v path with exactly `edges` edges (all vertices distinct).
// The edge uv itself is ignored, so this answers whether adding uv would
// close a cycle with edges + 1 vertices.
bool has_path_of_length(const Graph& g, int u, int v, int edges);

bool is_triangle_free(const Graph& g);
bool is_complete_multipartite(const Graph& g);

struct ClassParams {
  int s = 2;
  int s1 = 2;
  int s2 = 2;
  int ell = 2;
  int t = 1;
  int r = 1;

  // Validates s >= 2, ell >= 2, r >= 1 and derives t = floor(ell / 2).
  static ClassParams make(int s, int s1, int s2, int ell, int r);
};

// max over v of chi(B_r(v)); 0 for the empty graph.
int local_colourability(const Graph& g, int r);
bool is_r_locally_s_colourable(const Graph& g, int r, int s);
inline bool is_r_locally_s_colourable(const Graph& g, const ClassParams& params) {
  return is_r_locally_s_colourable(g, params.r, params.s);
}
bool is_co_locally_s_colourable(const Graph& g, int s);

inline constexpr int kMaxExhaustiveOrder = 7;

// Calls visit on every labeled simple graph on n vertices, in edge-mask
// order (bit b of the mask is the b-th pair in graph6 order). The visitor
// returns false to stop early. Throws LimitExceeded for n > 7.
void enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& visit);
std::vector<Graph> all_labeled_graphs(int n);

// Pairs (i, j), i < j, in graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> graph6_pair_order(int n);

}  // namespace chromadisc
