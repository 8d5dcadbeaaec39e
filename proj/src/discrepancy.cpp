#include "chromadisc/discrepancy.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "chromadisc/errors.hpp"

namespace chromadisc {

namespace {

void require_proper_partition(const Graph& g, const ProperColoring& sigma) {
  if (!sigma.is_partition_of(g.vertices()) || !sigma.is_proper_on(g)) {
    throw DomainError("colouring is not a proper partition of the vertex set");
  }
}

std::vector<VertexSet> classes_smallest_first(const ProperColoring& sigma) {
  std::vector<VertexSet> classes = sigma.classes();
  std::stable_sort(classes.begin(), classes.end(),
                   [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return classes;
}

class CoverSearch {
 public:
  CoverSearch(ChromaticCache& cache, const ProperColoring& sigma, int stop_at)
      : cache_(cache), classes_(classes_smallest_first(sigma)), stop_at_(std::max(stop_at, 1)) {}

  RainbowWitness run() {
    recurse(0, VertexSet());
    return {best_, best_cover_};
  }

 private:
  void recurse(std::size_t i, VertexSet partial) {
    const int lower = cache_.chromatic_number(partial);
    if (lower >= best_) return;
    if (i == classes_.size()) {
      best_ = lower;
      best_cover_ = partial;
      return;
    }
    for (int v : classes_[i]) {
      VertexSet next = partial;
      next.insert(v);
      recurse(i + 1, next);
      if (best_ <= stop_at_) return;
    }
  }

  ChromaticCache& cache_;
  std::vector<VertexSet> classes_;
  int stop_at_;
  int best_ = INT_MAX;
  VertexSet best_cover_;
};

class RainbowSearch {
 public:
  RainbowSearch(ChromaticCache& cache, const ProperColoring& sigma)
      : cache_(cache), classes_(classes_smallest_first(sigma)) {}

  RainbowWitness run() {
    best_set_ = VertexSet::singleton(classes_.front().first());
    recurse(0, VertexSet());
    return {best_, best_set_};
  }

 private:
  void recurse(std::size_t i, VertexSet x) {
    const int chi = cache_.chromatic_number(x);
    const int value = x.size() - chi;
    if (value > best_) {
      best_ = value;
      best_set_ = x;
    }
    const int remaining = static_cast<int>(classes_.size() - i);
    if (x.size() + remaining - chi <= best_) return;
    if (i == classes_.size()) return;
    for (int v : classes_[i]) {
      VertexSet next = x;
      next.insert(v);
      recurse(i + 1, next);
    }
    recurse(i + 1, x);
  }

  ChromaticCache& cache_;
  std::vector<VertexSet> classes_;
  int best_ = 0;
  VertexSet best_set_;
};

}  // namespace

RainbowWitness discrepancy_of_coloring(ChromaticCache& cache, const ProperColoring& sigma) {
  const Graph& g = cache.host();
  if (g.empty()) throw DomainError("discrepancy of a colouring of the empty graph");
  require_proper_partition(g, sigma);
  return RainbowSearch(cache, sigma).run();
}

RainbowWitness discrepancy_of_coloring(const Graph& g, const ProperColoring& sigma) {
  ChromaticCache cache(g);
  return discrepancy_of_coloring(cache, sigma);
}

RainbowWitness min_rainbow_cover_chromatic(ChromaticCache& cache, const ProperColoring& sigma,
                                           int stop_at) {
  const Graph& g = cache.host();
  require_proper_partition(g, sigma);
  if (sigma.size() == 0) return {0, VertexSet()};
  return CoverSearch(cache, sigma, stop_at).run();
}

RainbowWitness min_rainbow_cover_chromatic(const Graph& g, const ProperColoring& sigma) {
  ChromaticCache cache(g);
  return min_rainbow_cover_chromatic(cache, sigma);
}

FValueResult f_value(ChromaticCache& cache, int p) {
  const Graph& g = cache.host();
  const int chi = cache.chromatic_number(g.vertices());
  if (p < chi || p > g.order()) {
    throw DomainError("f_value: p = " + std::to_string(p) + " outside [" + std::to_string(chi) +
                      ", " + std::to_string(g.order()) + "]");
  }
  const int cap = std::min(p, chi);
  FValueResult best;
  best.p = p;
  enumerate_proper_partitions(g, p, [&](const ProperColoring& sigma) {
    // A colouring whose cheapest cover is no better than the current best
    // cannot raise the maximum, so its search may stop early.
    const auto cover = min_rainbow_cover_chromatic(cache, sigma, best.f);
    if (cover.value > best.f) {
      best.f = cover.value;
      best.witness_coloring = sigma;
      best.witness_cover = cover.vertices;
    }
    return best.f < cap;
  });
  return best;
}

FValueResult f_value(const Graph& g, int p) {
  ChromaticCache cache(g);
  return f_value(cache, p);
}

DiscrepancyResult chromatic_discrepancy(const Graph& g) {
  if (g.empty()) throw DomainError("chromatic discrepancy of the empty graph is undefined");
  ChromaticCache cache(g);
  const int chi = cache.chromatic_number(g.vertices());
  DiscrepancyResult best;
  best.phi = INT_MAX;
  for (int p = chi; p <= g.order(); ++p) {
    // Any cover has chi(G[X]) <= chi(G), so p - f_G(p) >= p - chi(G).
    if (p - chi >= best.phi) break;
    const int cap = std::min(p, chi);
    enumerate_proper_partitions(g, p, [&](const ProperColoring& sigma) {
      // Only colourings whose every cover needs more than p - phi colours
      // improve the running minimum.
      const int threshold = best.phi == INT_MAX ? 0 : p - best.phi;
      const auto cover = min_rainbow_cover_chromatic(cache, sigma, threshold);
      if (cover.value > threshold) {
        best.phi = p - cover.value;
        best.p = p;
        best.f = cover.value;
        best.k = p - chi;
        best.witness_coloring = sigma;
        best.witness_set = cover.vertices;
        if (best.phi == 0 || cover.value == cap) return false;
      }
      return true;
    });
    if (best.phi == 0) break;
  }
  return best;
}

int naive_colouring_discrepancy(ChromaticCache& cache, const ProperColoring& sigma) {
  const Graph& g = cache.host();
  require_proper_partition(g, sigma);
  int best = INT_MIN;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t bits = full;; bits = (bits - 1) & full) {
    if (bits == 0) break;
    const VertexSet s(bits);
    best = std::max(best, sigma.palette_size(s) - cache.chromatic_number(s));
  }
  return best;
}

int naive_chromatic_discrepancy(const Graph& g) {
  if (g.empty()) throw DomainError("chromatic discrepancy of the empty graph is undefined");
  ChromaticCache cache(g);
  int best = INT_MAX;
  for (int p = cache.chromatic_number(g.vertices()); p <= g.order(); ++p) {
    enumerate_proper_partitions(g, p, [&](const ProperColoring& sigma) {
      best = std::min(best, naive_colouring_discrepancy(cache, sigma));
      return true;
    });
  }
  return best;
}

}  // namespace chromadisc
