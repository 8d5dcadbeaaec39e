#include "chromadisc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "chromadisc/errors.hpp"

namespace chromadisc {

// ---------------------------------------------------------------------------
// ProperColoring

ProperColoring::ProperColoring(std::vector<VertexSet> classes) {
  colour_.fill(-1);
  std::erase_if(classes, [](VertexSet c) { return c.empty(); });
  std::sort(classes.begin(), classes.end(),
            [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  VertexSet seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (seen.intersects(classes[i])) throw DomainError("colour classes overlap");
    seen |= classes[i];
    for (int v : classes[i]) colour_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(i);
  }
  classes_ = std::move(classes);
}

ProperColoring ProperColoring::from_colours(std::span<const int> colour_of) {
  if (colour_of.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw DomainError("colour vector longer than 64");
  }
  std::vector<VertexSet> classes;
  for (std::size_t v = 0; v < colour_of.size(); ++v) {
    const int c = colour_of[v];
    if (c < 0) continue;
    if (static_cast<std::size_t>(c) >= classes.size()) classes.resize(static_cast<std::size_t>(c) + 1);
    classes[static_cast<std::size_t>(c)].insert(static_cast<int>(v));
  }
  return ProperColoring(std::move(classes));
}

VertexSet ProperColoring::support() const {
  VertexSet out;
  for (VertexSet c : classes_) out |= c;
  return out;
}

std::uint64_t ProperColoring::palette(VertexSet s) const {
  std::uint64_t mask = 0;
  for (int v : s) {
    const int c = colour_[static_cast<std::size_t>(v)];
    if (c >= 0) mask |= std::uint64_t{1} << c;
  }
  return mask;
}

int ProperColoring::palette_size(VertexSet s) const { return std::popcount(palette(s)); }

bool ProperColoring::is_proper_on(const Graph& g) const {
  if (!support().is_subset_of(g.vertices())) return false;
  return std::all_of(classes_.begin(), classes_.end(),
                     [&](VertexSet c) { return g.is_independent(c); });
}

bool ProperColoring::is_partition_of(VertexSet vertices) const { return support() == vertices; }

std::vector<std::vector<int>> ProperColoring::as_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(classes_.size());
  for (VertexSet c : classes_) out.push_back(c.to_vector());
  return out;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : g_(g) {}

  VertexSet run(VertexSet s) {
    best_ = VertexSet();
    expand(s, VertexSet());
    return best_;
  }

 private:
  void expand(VertexSet cand, VertexSet current) {
    if (cand.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    // Greedy colouring of the candidates bounds the clique they can extend.
    std::array<int, kMaxVertices> order{};
    std::array<int, kMaxVertices> bound{};
    int count = 0;
    VertexSet uncoloured = cand;
    for (int colour = 1; !uncoloured.empty(); ++colour) {
      VertexSet q = uncoloured;
      while (!q.empty()) {
        const int v = q.first();
        q -= g_.closed_neighbourhood(v);
        uncoloured.erase(v);
        order[static_cast<std::size_t>(count)] = v;
        bound[static_cast<std::size_t>(count)] = colour;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (current.size() + bound[static_cast<std::size_t>(i)] <= best_.size()) return;
      const int v = order[static_cast<std::size_t>(i)];
      VertexSet next = current;
      next.insert(v);
      expand(cand & g_.neighbours(v), next);
      cand.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
};

// DSATUR backtracking for k-colourability of G[S].
class KColourSearch {
 public:
  KColourSearch(const Graph& g, VertexSet s, int k) : g_(g), s_(s), k_(k) {
    colour_.fill(-1);
    forbidden_.fill(0);
  }

  bool run() { return search(s_, 0); }

  ProperColoring colouring() const {
    std::vector<int> col(static_cast<std::size_t>(g_.order()), -1);
    for (int v : s_) col[static_cast<std::size_t>(v)] = colour_[static_cast<std::size_t>(v)];
    return ProperColoring::from_colours(col);
  }

 private:
  bool search(VertexSet uncoloured, int used) {
    if (uncoloured.empty()) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    for (int v : uncoloured) {
      const int sat = std::popcount(forbidden_[static_cast<std::size_t>(v)]);
      if (sat < pick_sat) continue;
      const int deg = g_.degree_in(v, uncoloured);
      if (sat > pick_sat || deg > pick_deg) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    const int limit = std::min(k_, used + 1);
    const std::uint64_t limit_mask = limit >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << limit) - 1;
    std::uint64_t avail = ~forbidden_[static_cast<std::size_t>(pick)] & limit_mask;
    const VertexSet rest = uncoloured - VertexSet::singleton(pick);
    const VertexSet nbrs = g_.neighbours(pick) & rest;
    while (avail != 0) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      const std::uint64_t bit = std::uint64_t{1} << c;
      VertexSet changed;
      for (int u : nbrs) {
        if ((forbidden_[static_cast<std::size_t>(u)] & bit) == 0) {
          forbidden_[static_cast<std::size_t>(u)] |= bit;
          changed.insert(u);
        }
      }
      colour_[static_cast<std::size_t>(pick)] = static_cast<std::int8_t>(c);
      if (search(rest, std::max(used, c + 1))) return true;
      for (int u : changed) forbidden_[static_cast<std::size_t>(u)] &= ~bit;
    }
    colour_[static_cast<std::size_t>(pick)] = -1;
    return false;
  }

  const Graph& g_;
  VertexSet s_;
  int k_;
  std::array<std::int8_t, kMaxVertices> colour_{};
  std::array<std::uint64_t, kMaxVertices> forbidden_{};
};

ProperColoring greedy_along(const Graph& g, std::span<const int> order) {
  std::vector<int> col(static_cast<std::size_t>(g.order()), -1);
  for (int v : order) {
    std::uint64_t used = 0;
    for (int u : g.neighbours(v)) {
      const int c = col[static_cast<std::size_t>(u)];
      if (c >= 0) used |= std::uint64_t{1} << c;
    }
    col[static_cast<std::size_t>(v)] = std::countr_one(used);
  }
  return ProperColoring::from_colours(col);
}

}  // namespace

VertexSet maximum_clique(const Graph& g, VertexSet s) { return MaxClique(g).run(s); }

int clique_number(const Graph& g, VertexSet s) { return maximum_clique(g, s).size(); }

// ---------------------------------------------------------------------------
// Greedy colourings

ProperColoring greedy_degeneracy_coloring(const Graph& g, std::span<const int> ordering) {
  VertexSet seen;
  for (int v : ordering) {
    if (v < 0 || v >= g.order() || seen.contains(v)) {
      throw DomainError("greedy_degeneracy_coloring: ordering is not a permutation of V");
    }
    seen.insert(v);
  }
  if (seen != g.vertices()) {
    throw DomainError("greedy_degeneracy_coloring: ordering is not a permutation of V");
  }
  std::vector<int> reversed(ordering.rbegin(), ordering.rend());
  return greedy_along(g, reversed);
}

ProperColoring greedy_colouring(const Graph& g, VertexSet s) {
  auto order = degeneracy(g, s).ordering;
  std::reverse(order.begin(), order.end());
  // Restrict adjacency to S implicitly: vertices outside S stay uncoloured.
  return greedy_along(g, order);
}

// ---------------------------------------------------------------------------
// Chromatic number

ChromaticSolution solve_chromatic(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw DomainError("solve_chromatic: set out of range");
  if (s.empty()) return {0, ProperColoring()};
  if (g.is_independent(s)) return {1, ProperColoring({s})};
  const int lower = clique_number(g, s);
  ProperColoring upper = greedy_colouring(g, s);
  for (int k = lower; k < upper.size(); ++k) {
    KColourSearch search(g, s, k);
    if (search.run()) return {k, search.colouring()};
  }
  return {upper.size(), std::move(upper)};
}

int chromatic_number(const Graph& g, VertexSet s) { return solve_chromatic(g, s).chi; }

bool is_k_colourable(const Graph& g, VertexSet s, int k) {
  if (s.empty()) return true;
  if (k <= 0) return false;
  return KColourSearch(g, s, k).run();
}

ChromaticCache::ChromaticCache(const Graph& host) : host_(host) {
  if (host_.order() <= kDenseLimit) {
    dense_.assign(std::size_t{1} << host_.order(), std::int8_t{-1});
  }
}

int ChromaticCache::chromatic_number(VertexSet s) {
  if (s.size() <= 1) return s.size();
  if (!dense_.empty()) {
    auto& slot = dense_[s.bits()];
    if (slot < 0) {
      slot = static_cast<std::int8_t>(chromadisc::chromatic_number(host_, s));
      ++evaluations_;
    }
    return slot;
  }
  auto it = sparse_.find(s.bits());
  if (it != sparse_.end()) return it->second;
  const int chi = chromadisc::chromatic_number(host_, s);
  ++evaluations_;
  sparse_.emplace(s.bits(), static_cast<std::int8_t>(chi));
  return chi;
}

// ---------------------------------------------------------------------------
// Partition enumeration

namespace {

class PartitionEnumerator {
 public:
  PartitionEnumerator(const Graph& g, int p, const std::function<bool(const ProperColoring&)>& visit)
      : g_(g), p_(p), n_(g.order()), visit_(visit), classes_(static_cast<std::size_t>(p)) {}

  void run() { recurse(0, 0); }

 private:
  bool recurse(int v, int open) {
    if (v == n_) {
      if (open != p_) return true;
      return visit_(ProperColoring(classes_));
    }
    if (open + (n_ - v) < p_) return true;
    const VertexSet nbrs = g_.neighbours(v);
    for (int c = 0; c < open; ++c) {
      auto& cls = classes_[static_cast<std::size_t>(c)];
      if (cls.intersects(nbrs)) continue;
      cls.insert(v);
      const bool go_on = recurse(v + 1, open);
      cls.erase(v);
      if (!go_on) return false;
    }
    if (open < p_) {
      classes_[static_cast<std::size_t>(open)] = VertexSet::singleton(v);
      const bool go_on = recurse(v + 1, open + 1);
      classes_[static_cast<std::size_t>(open)] = VertexSet();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  int p_;
  int n_;
  const std::function<bool(const ProperColoring&)>& visit_;
  std::vector<VertexSet> classes_;
};

}  // namespace

bool enumerate_proper_partitions(const Graph& g, int p,
                                 const std::function<bool(const ProperColoring&)>& visit) {
  if (p > g.order() || p < chromatic_number(g)) return false;
  PartitionEnumerator(g, p, visit).run();
  return true;
}

std::vector<ProperColoring> proper_partitions(const Graph& g, int p) {
  std::vector<ProperColoring> out;
  enumerate_proper_partitions(g, p, [&](const ProperColoring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Local chromatic number

namespace {

// Is there a proper colouring (any number of colours) with
// |sigma(N[v])| <= target for every v?
class LocalPaletteSearch {
 public:
  LocalPaletteSearch(const Graph& g, int target) : g_(g), target_(target) {
    colour_.fill(-1);
    palette_.fill(0);
    order_ = search_order();
  }

  bool run() { return recurse(0, 0); }

  ProperColoring witness() const {
    std::vector<int> col(colour_.begin(), colour_.begin() + g_.order());
    return ProperColoring::from_colours(col);
  }

 private:
  std::vector<int> search_order() const {
    // BFS from the highest-degree unvisited vertex keeps each closed
    // neighbourhood's colours decided close together.
    std::vector<int> order;
    VertexSet left = g_.vertices();
    while (!left.empty()) {
      int root = left.first();
      for (int v : left) {
        if (g_.degree(v) > g_.degree(root)) root = v;
      }
      std::vector<int> queue{root};
      left.erase(root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        order.push_back(v);
        for (int u : g_.neighbours(v) & left) {
          queue.push_back(u);
          left.erase(u);
        }
      }
    }
    return order;
  }

  bool recurse(std::size_t idx, int used) {
    if (idx == order_.size()) return true;
    const int v = order_[idx];
    const VertexSet closed = g_.closed_neighbourhood(v);
    for (int c = 0; c <= used && c < kMaxVertices; ++c) {
      if (c < used && classes_[static_cast<std::size_t>(c)].intersects(g_.neighbours(v))) continue;
      const std::uint64_t bit = std::uint64_t{1} << c;
      bool ok = true;
      for (int w : closed) {
        if (std::popcount(palette_[static_cast<std::size_t>(w)] | bit) > target_) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::array<std::uint64_t, kMaxVertices> saved{};
      for (int w : closed) saved[static_cast<std::size_t>(w)] = palette_[static_cast<std::size_t>(w)];
      for (int w : closed) palette_[static_cast<std::size_t>(w)] |= bit;
      colour_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(c);
      classes_[static_cast<std::size_t>(c)].insert(v);
      if (recurse(idx + 1, std::max(used, c + 1))) return true;
      classes_[static_cast<std::size_t>(c)].erase(v);
      colour_[static_cast<std::size_t>(v)] = -1;
      for (int w : closed) palette_[static_cast<std::size_t>(w)] = saved[static_cast<std::size_t>(w)];
    }
    return false;
  }

  const Graph& g_;
  int target_;
  std::vector<int> order_;
  std::array<std::int8_t, kMaxVertices> colour_{};
  std::array<std::uint64_t, kMaxVertices> palette_{};
  std::array<VertexSet, kMaxVertices> classes_{};
};

}  // namespace

LocalChromaticResult local_chromatic(const Graph& g) {
  if (g.empty()) throw DomainError("local chromatic number of the empty graph is undefined");
  auto optimal = solve_chromatic(g, g.vertices());
  const int lower = std::max(1, clique_number(g));
  for (int target = lower; target < optimal.chi; ++target) {
    LocalPaletteSearch search(g, target);
    if (search.run()) return {target, search.witness()};
  }
  return {optimal.chi, std::move(optimal.colouring)};
}

int local_chromatic_number(const Graph& g) { return local_chromatic(g).psi; }

ColoringStats coloring_stats(const Graph& g) {
  ColoringStats stats;
  stats.chi = chromatic_number(g);
  stats.omega = clique_number(g);
  stats.psi = g.empty() ? 0 : local_chromatic_number(g);
  stats.degeneracy = degeneracy(g).value;
  return stats;
}

// ---------------------------------------------------------------------------
// Critical subgraphs

VertexSet critical_vertex_set(const Graph& g) {
  if (g.empty()) throw DomainError("critical subgraph of the empty graph");
  ChromaticCache cache(g);
  VertexSet keep = g.vertices();
  const int chi = cache.chromatic_number(keep);
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet without = keep - VertexSet::singleton(v);
    if (cache.chromatic_number(without) == chi) keep = without;
  }
  return keep;
}

Graph extract_critical_subgraph(const Graph& g) { return induced_subgraph(g, critical_vertex_set(g)); }

// ---------------------------------------------------------------------------
// Random colour-order independent sets

VertexSet random_order_independent_set(const Graph& g, const ProperColoring& sigma,
                                       std::uint64_t seed) {
  if (!sigma.is_partition_of(g.vertices()) || !sigma.is_proper_on(g)) {
    throw DomainError("random_order_independent_set: colouring is not a proper partition of V");
  }
  std::vector<int> rank(static_cast<std::size_t>(sigma.size()));
  std::iota(rank.begin(), rank.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(rank.begin(), rank.end(), rng);
  VertexSet chosen;
  for (int v = 0; v < g.order(); ++v) {
    const int mine = rank[static_cast<std::size_t>(sigma.colour_of(v))];
    bool first = true;
    for (int u : g.neighbours(v)) {
      if (rank[static_cast<std::size_t>(sigma.colour_of(u))] < mine) {
        first = false;
        break;
      }
    }
    if (first) chosen.insert(v);
  }
  return chosen;
}

ProperColoring colour_with_at_most(const Graph& g, VertexSet s, int k) {
  ProperColoring greedy = greedy_colouring(g, s);
  if (greedy.size() <= k) return greedy;
  auto exact = solve_chromatic(g, s);
  if (exact.chi > k) {
    throw LocalityViolation("set needs " + std::to_string(exact.chi) + " colours, bound is " +
                            std::to_string(k));
  }
  return std::move(exact.colouring);
}

}  // namespace chromadisc
