#include "chromadisc/graph.hpp"

#include <algorithm>
#include <string>

#include "chromadisc/coloring.hpp"
#include "chromadisc/errors.hpp"

namespace chromadisc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw LimitExceeded("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                      std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

VertexSet Graph::neighbours(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].size());
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, adj_[v].size());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - VertexSet::singleton(v)).is_subset_of(adj_[v])) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    frontier = neighbours(frontier) - seen;
    seen |= frontier;
  }
  return seen == vertices();
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw DomainError("induced_subgraph: set out of range");
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (int v : s) index[v] = next++;
  Graph h(next);
  for (int u : s) {
    for (int v : g.neighbours(u) & s) {
      if (u < v) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Degeneracy degeneracy(const Graph& g, VertexSet s) {
  Degeneracy out;
  VertexSet alive = s;
  out.ordering.reserve(s.size());
  while (!alive.empty()) {
    int best = -1;
    int best_deg = kMaxVertices + 1;
    for (int v : alive) {
      int d = g.degree_in(v, alive);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    }
    out.value = std::max(out.value, best_deg);
    out.ordering.push_back(best);
    alive.erase(best);
  }
  return out;
}

std::array<int, kMaxVertices> bfs_distances(const Graph& g, int v) {
  std::array<int, kMaxVertices> dist;
  dist.fill(-1);
  VertexSet seen = VertexSet::singleton(v);
  VertexSet frontier = seen;
  dist[v] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    frontier = g.neighbours(frontier) - seen;
    for (int u : frontier) dist[u] = d;
    seen |= frontier;
  }
  return dist;
}

BallView ball(const Graph& g, int v, int r) {
  if (v < 0 || v >= g.order()) throw DomainError("ball: centre out of range");
  if (r < 0) throw DomainError("ball: negative radius");
  BallView view;
  view.center = v;
  view.radius = r;
  VertexSet shell = VertexSet::singleton(v);
  view.ball = shell;
  view.shells.push_back(shell);
  for (int i = 1; i <= r; ++i) {
    shell = g.neighbours(shell) - view.ball;
    view.shells.push_back(shell);
    view.ball |= shell;
  }
  return view;
}

namespace {

// Distances to `target` inside the subgraph induced by `allowed`.
std::array<int, kMaxVertices> distances_within(const Graph& g, int target, VertexSet allowed) {
  std::array<int, kMaxVertices> dist;
  dist.fill(kMaxVertices + 1);
  VertexSet seen = VertexSet::singleton(target);
  VertexSet frontier = seen;
  dist[target] = 0;
  for (int d = 1; !frontier.empty(); ++d) {
    frontier = (g.neighbours(frontier) & allowed) - seen;
    for (int u : frontier) dist[u] = d;
    seen |= frontier;
  }
  return dist;
}

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int length) : g_(g), length_(length) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s + length_ <= g_.order(); ++s) {
      start_ = s;
      allowed_ = g_.vertices() - VertexSet::range(s);
      dist_ = distances_within(g_, s, allowed_);
      path_.assign(1, s);
      if (extend(s, allowed_ - VertexSet::singleton(s))) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(int cur, VertexSet free) {
    const int have = static_cast<int>(path_.size());
    if (have == length_) return g_.adjacent(cur, start_);
    for (int next : g_.neighbours(cur) & free) {
      // After stepping to `next` the path has have+1 vertices and still
      // needs length_ - have edges to return to the start.
      if (dist_[next] > length_ - have) continue;
      path_.push_back(next);
      if (extend(next, free - VertexSet::singleton(next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int length_;
  int start_ = 0;
  VertexSet allowed_;
  std::array<int, kMaxVertices> dist_{};
  std::vector<int> path_;
};

bool path_search(const Graph& g, int cur, int target, int remaining, VertexSet free,
                 const std::array<int, kMaxVertices>& dist) {
  if (remaining == 1) return g.adjacent(cur, target);
  for (int next : g.neighbours(cur) & free) {
    if (dist[next] > remaining - 1) continue;
    if (path_search(g, next, target, remaining - 1, free - VertexSet::singleton(next), dist)) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle_of_length(const Graph& g, int length) {
  if (length < 3) throw DomainError("cycle length must be at least 3");
  if (length > g.order()) return std::nullopt;
  return CycleSearch(g, length).run();
}

bool has_cycle_of_length(const Graph& g, int length) {
  return find_cycle_of_length(g, length).has_value();
}

bool has_path_of_length(const Graph& g, int u, int v, int edges) {
  if (edges < 2 || u == v) return false;
  VertexSet allowed = g.vertices() - VertexSet::singleton(u);
  auto dist = distances_within(g, v, allowed);
  VertexSet free = allowed - VertexSet::singleton(v);
  for (int next : g.neighbours(u) & free) {
    if (dist[next] > edges - 1) continue;
    if (path_search(g, next, v, edges - 1, free - VertexSet::singleton(next), dist)) return true;
  }
  return false;
}

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbours(u).intersects(g.neighbours(v))) return false;
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) {
  // Non-adjacency must be an equivalence relation: non-adjacent vertices
  // share the same closed non-neighbourhood.
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u) {
    const VertexSet part_u = all - g.neighbours(u);
    for (int v : part_u) {
      if (all - g.neighbours(v) != part_u) return false;
    }
  }
  return true;
}

ClassParams ClassParams::make(int s, int s1, int s2, int ell, int r) {
  if (s < 2) throw DomainError("class parameter s must be at least 2");
  if (ell < 2) throw DomainError("class parameter ell must be at least 2");
  if (r < 1) throw DomainError("class parameter r must be at least 1");
  return ClassParams{s, s1, s2, ell, ell / 2, r};
}

int local_colourability(const Graph& g, int r) {
  int worst = 0;
  for (int v = 0; v < g.order(); ++v) {
    worst = std::max(worst, chromatic_number(g, ball(g, v, r).ball));
  }
  return worst;
}

bool is_r_locally_s_colourable(const Graph& g, int r, int s) {
  if (r < 1) throw DomainError("locality radius must be at least 1");
  for (int v = 0; v < g.order(); ++v) {
    if (chromatic_number(g, ball(g, v, r).ball) > s) return false;
  }
  return true;
}

bool is_co_locally_s_colourable(const Graph& g, int s) {
  if (s < 1) throw DomainError("co-local bound must be at least 1");
  ChromaticCache cache(g);
  for (int v = 0; v < g.order(); ++v) {
    for (int u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      if (cache.chromatic_number(g.neighbours(v) | VertexSet::singleton(u)) > s) return false;
    }
  }
  return true;
}

std::vector<Edge> graph6_pair_order(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

void enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& visit) {
  if (n < 0) throw DomainError("negative order");
  if (n > kMaxExhaustiveOrder) {
    throw LimitExceeded("exhaustive enumeration refused for n = " + std::to_string(n) +
                        " (cap is " + std::to_string(kMaxExhaustiveOrder) + ")");
  }
  const auto pairs = graph6_pair_order(n);
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    }
    if (!visit(g)) return;
  }
}

std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Graph> out;
  enumerate_labeled_graphs(n, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace chromadisc
