#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc {

// A proper colouring viewed as a partition into colour classes. Colour names
// are quotiented out: classes are stored in ascending order of their
// smallest vertex, and class i is "colour i".
class ProperColoring {
 public:
  ProperColoring() { colour_.fill(-1); }
  // Empty classes are dropped; classes must be pairwise disjoint.
  explicit ProperColoring(std::vector<VertexSet> classes);
  // colour_of[v] < 0 leaves v uncoloured.
  static ProperColoring from_colours(std::span<const int> colour_of);

  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  VertexSet class_at(int i) const { return classes_[static_cast<std::size_t>(i)]; }
  int colour_of(int v) const { return colour_[static_cast<std::size_t>(v)]; }
  VertexSet support() const;

  // Bitmask of the colours present on s.
  std::uint64_t palette(VertexSet s) const;
  int palette_size(VertexSet s) const;
  bool is_rainbow(VertexSet s) const { return palette_size(s) == s.size(); }

  bool is_proper_on(const Graph& g) const;
  bool is_partition_of(VertexSet vertices) const;

  std::vector<std::vector<int>> as_lists() const;

  bool operator==(const ProperColoring& other) const { return classes_ == other.classes_; }

 private:
  std::vector<VertexSet> classes_;
  std::array<std::int8_t, kMaxVertices> colour_{};
};

struct ColoringStats {
  int chi = 0;
  int omega = 0;
  int psi = 0;
  int degeneracy = 0;
};

struct ChromaticSolution {
  int chi = 0;
  ProperColoring colouring;  // optimal colouring of G[S]
};

// Exact chromatic number of G[S] by DSATUR branch-and-bound between the
// clique lower bound and the greedy upper bound.
ChromaticSolution solve_chromatic(const Graph& g, VertexSet s);
int chromatic_number(const Graph& g, VertexSet s);
inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

// True if G[S] admits a proper colouring with at most k colours.
bool is_k_colourable(const Graph& g, VertexSet s, int k);

// Memo of chi(G[S]) keyed by the vertex subset of one host graph. Not
// thread-safe; give each worker its own.
class ChromaticCache {
 public:
  explicit ChromaticCache(const Graph& host);
  int chromatic_number(VertexSet s);
  const Graph& host() const { return host_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  static constexpr int kDenseLimit = 20;
  Graph host_;
  std::vector<std::int8_t> dense_;
  std::unordered_map<std::uint64_t, std::int8_t> sparse_;
  std::size_t evaluations_ = 0;
};

int clique_number(const Graph& g, VertexSet s);
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }
VertexSet maximum_clique(const Graph& g, VertexSet s);

// Visits every partition of V(g) into exactly p independent classes, once
// each, in canonical form. The visitor returns false to stop. Returns false
// (and visits nothing) when p lies outside [chi(g), |V(g)|].
bool enumerate_proper_partitions(const Graph& g, int p,
                                 const std::function<bool(const ProperColoring&)>& visit);
std::vector<ProperColoring> proper_partitions(const Graph& g, int p);

struct LocalChromaticResult {
  int psi = 0;
  ProperColoring witness;  // attains max_v |sigma(N[v])| = psi
};

LocalChromaticResult local_chromatic(const Graph& g);
int local_chromatic_number(const Graph& g);

ColoringStats coloring_stats(const Graph& g);

// Deletes vertices in ascending order while chi is preserved.
VertexSet critical_vertex_set(const Graph& g);
Graph extract_critical_subgraph(const Graph& g);

// Draws a uniform order on the colours and keeps every vertex whose colour
// precedes all colours on its neighbours.
VertexSet random_order_independent_set(const Graph& g, const ProperColoring& sigma,
                                       std::uint64_t seed);

// Colours vertices in reverse peeling order with the smallest free colour.
ProperColoring greedy_degeneracy_coloring(const Graph& g, std::span<const int> ordering);
// Greedy along the degeneracy order of G[S]; uses at most degeneracy + 1 colours.
ProperColoring greedy_colouring(const Graph& g, VertexSet s);

// Greedy first, exact fallback; throws LocalityViolation when chi(G[S]) > k.
ProperColoring colour_with_at_most(const Graph& g, VertexSet s, int k);

}  // namespace chromadisc
