#include "chromadisc/ball_coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "chromadisc/errors.hpp"

namespace chromadisc {

bool ThetaWitness::is_bipartite() const {
  const int len = static_cast<int>(cycle.size());
  if (len % 2 != 0) return false;
  const auto a = std::find(cycle.begin(), cycle.end(), chord.first) - cycle.begin();
  const auto b = std::find(cycle.begin(), cycle.end(), chord.second) - cycle.begin();
  return std::abs(a - b) % 2 == 1;
}

int BallColoring::colours_used() const {
  std::uint64_t used = 0;
  for (int c : colours) {
    if (c > 0) used |= std::uint64_t{1} << c;
  }
  return std::popcount(used);
}

namespace {

void refuse_cycle(const Graph& g, int ell) {
  if (ell < 2) throw DomainError("ell must be at least 2");
  if (auto cycle = find_cycle_of_length(g, ell + 1)) {
    throw CycleRefusal("graph contains a cycle of length " + std::to_string(ell + 1),
                       std::move(*cycle));
  }
}

}  // namespace

std::vector<LayerDegeneracy> layer_degeneracy_report(const Graph& g, int v, int ell) {
  refuse_cycle(g, ell);
  const BallView view = ball(g, v, ell / 2);
  std::vector<LayerDegeneracy> out;
  for (int r = 1; r <= ell / 2; ++r) {
    const VertexSet layer =
        r < static_cast<int>(view.shells.size()) ? view.shells[static_cast<std::size_t>(r)]
                                                 : VertexSet{};
    out.push_back({r, degeneracy(g, layer).value});
  }
  return out;
}

BallColoring colour_ball(const Graph& g, int v, int ell) {
  refuse_cycle(g, ell);
  const int t = ell / 2;
  const BallView view = ball(g, v, t);

  BallColoring out;
  out.center = v;
  out.radius = t;
  out.ell = ell;
  out.colours.assign(static_cast<std::size_t>(g.order()), 0);
  out.even_palette = {1, ell};
  out.odd_palette = {ell + 1, 2 * ell};
  out.ball = view.ball;

  for (std::size_t r = 0; r < view.shells.size(); ++r) {
    const VertexSet layer = view.shells[r];
    const Degeneracy d = degeneracy(g, layer);
    if (d.value > layer_degeneracy_bound(ell)) {
      throw CertificateFailure("layer " + std::to_string(r) + " has degeneracy " +
                               std::to_string(d.value) + " above " +
                               std::to_string(layer_degeneracy_bound(ell)));
    }
    const int base = r % 2 == 0 ? out.even_palette.first : out.odd_palette.first;
    // Reverse peeling order: each vertex has at most d.value earlier neighbours.
    for (auto it = d.ordering.rbegin(); it != d.ordering.rend(); ++it) {
      std::uint64_t taken = 0;
      for (int u : g.neighbours(*it) & layer) {
        const int c = out.colours[static_cast<std::size_t>(u)];
        if (c > 0) taken |= std::uint64_t{1} << (c - base);
      }
      out.colours[static_cast<std::size_t>(*it)] = base + std::countr_one(taken);
    }
  }
  return out;
}

namespace {

// Enumerates simple cycles whose smallest vertex is the start, each once
// per direction, and tests them for chords.
class ThetaSearch {
 public:
  ThetaSearch(const Graph& g, int k, bool bipartite_only)
      : g_(g), min_length_(2 * k), bipartite_only_(bipartite_only) {}

  std::optional<ThetaWitness> run() {
    for (int s = 0; s < g_.order(); ++s) {
      allowed_ = VertexSet::range(g_.order()) - VertexSet::range(s + 1);
      start_ = s;
      path_ = {s};
      on_path_ = VertexSet::singleton(s);
      if (extend(s)) return found_;
    }
    return std::nullopt;
  }

 private:
  bool extend(int tail) {
    const int len = static_cast<int>(path_.size());
    if (len >= min_length_ && g_.adjacent(tail, start_) && path_[1] < tail && check_chords()) {
      return true;
    }
    for (int next : g_.neighbours(tail) & (allowed_ - on_path_)) {
      path_.push_back(next);
      on_path_.insert(next);
      if (extend(next)) return true;
      path_.pop_back();
      on_path_.erase(next);
    }
    return false;
  }

  bool check_chords() {
    const int len = static_cast<int>(path_.size());
    if (bipartite_only_ && len % 2 != 0) return false;
    for (int a = 0; a < len; ++a) {
      for (int b = a + 2; b < len; ++b) {
        if (a == 0 && b == len - 1) continue;
        if (!g_.adjacent(path_[static_cast<std::size_t>(a)], path_[static_cast<std::size_t>(b)])) {
          continue;
        }
        if (bipartite_only_ && (b - a) % 2 == 0) continue;
        found_ = ThetaWitness{path_, {path_[static_cast<std::size_t>(a)],
                                      path_[static_cast<std::size_t>(b)]}};
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  int min_length_;
  bool bipartite_only_;
  int start_ = 0;
  VertexSet allowed_;
  VertexSet on_path_;
  std::vector<int> path_;
  ThetaWitness found_;
};

}  // namespace

std::optional<ThetaWitness> find_theta_subgraph(const Graph& g, int k, bool bipartite_only) {
  if (k < 3) throw DomainError("theta search needs k >= 3");
  if (g.order() > kMaxThetaOrder) {
    throw LimitExceeded("theta search is limited to " + std::to_string(kMaxThetaOrder) +
                        " vertices");
  }
  return ThetaSearch(g, k, bipartite_only).run();
}

BipartiteSubgraph bipartite_min_degree_subgraph(const Graph& g) {
  BipartiteSubgraph out;
  VertexSet left;
  for (int v = 0; v < g.order(); v += 2) left.insert(v);
  const VertexSet all = g.vertices();

  for (bool improved = true; improved;) {
    improved = false;
    for (int v = 0; v < g.order(); ++v) {
      const VertexSet same = left.contains(v) ? left : all - left;
      const int inside = g.degree_in(v, same);
      if (2 * inside > g.degree(v)) {
        if (left.contains(v)) {
          left.erase(v);
        } else {
          left.insert(v);
        }
        ++out.flips;
        improved = true;
        break;
      }
    }
  }

  const int threshold = (g.min_degree() + 1) / 2;
  const VertexSet right = all - left;
  VertexSet kept = all;
  auto cross_degree = [&](int v) {
    return g.degree_in(v, (left.contains(v) ? right : left) & kept);
  };
  for (bool peeled = true; peeled;) {
    peeled = false;
    for (int v : kept) {
      if (cross_degree(v) < threshold) {
        kept.erase(v);
        ++out.peeled;
        peeled = true;
        break;
      }
    }
  }
  out.left = left & kept;
  out.right = right & kept;
  out.kept = kept;
  out.subgraph = Graph(g.order());
  for (int v : out.left) {
    for (int u : g.neighbours(v) & out.right) out.subgraph.add_edge(v, u);
  }
  return out;
}

}  // namespace chromadisc
