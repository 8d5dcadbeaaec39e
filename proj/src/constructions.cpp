#include "chromadisc/constructions.hpp"

#include <algorithm>
#include <string>

#include "chromadisc/errors.hpp"

namespace chromadisc {

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw DomainError("mycielskian of the empty graph");
  if (2 * n + 1 > kMaxVertices) {
    throw LimitExceeded("mycielskian would have " + std::to_string(2 * n + 1) + " vertices");
  }
  Graph m(2 * n + 1);
  for (auto [u, v] : g.edges()) {
    m.add_edge(u, v);
    m.add_edge(n + u, v);
    m.add_edge(u, n + v);
  }
  for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
  return m;
}

namespace {

ColoredConstruction finish(Graph g, std::vector<int> labels, int k, int s) {
  std::vector<int> zero_based(labels.size());
  std::transform(labels.begin(), labels.end(), zero_based.begin(), [](int c) { return c - 1; });
  auto canonical = ProperColoring::from_colours(zero_based);
  return {std::move(g), std::move(canonical), std::move(labels), k, s};
}

}  // namespace

ColoredConstruction mycielski(int k) {
  if (k < 2) throw DomainError("mycielski: k must be at least 2");
  Graph g = complete_graph(2);
  std::vector<int> labels{1, 2};
  for (int level = 3; level <= k; ++level) {
    g = mycielskian(g);
    const std::size_t n = labels.size();
    labels.resize(2 * n + 1, level);
    std::copy_n(labels.begin(), n, labels.begin() + static_cast<std::ptrdiff_t>(n));
  }
  return finish(std::move(g), std::move(labels), k, 2);
}

ColoredConstruction generalized_mycielski(int k, int s) {
  if (s < 2) throw DomainError("generalized_mycielski: s must be at least 2");
  if (k < s) throw DomainError("generalized_mycielski: k must be at least s");
  Graph g = complete_graph(s);
  std::vector<int> labels(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  for (int level = s + 1; level <= k; ++level) {
    const std::size_t n = labels.size();
    g = mycielskian(g);
    labels.resize(2 * n + 1, level);
    labels.back() = s;
  }
  return finish(std::move(g), std::move(labels), k, s);
}

Graph dirac_join(const Graph& g1, const Graph& g2) {
  if (g1.empty() || g2.empty()) throw DomainError("dirac_join needs two nonempty graphs");
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices) throw LimitExceeded("dirac_join would exceed 64 vertices");
  Graph j(n);
  for (auto [u, v] : g1.edges()) j.add_edge(u, v);
  for (auto [u, v] : g2.edges()) j.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u) {
    for (int v = n1; v < n; ++v) j.add_edge(u, v);
  }
  return j;
}

TightnessGadget lemma34_tightness_gadget(const Graph& g_prime, int k) {
  if (g_prime.empty()) throw DomainError("tightness gadget needs a nonempty base graph");
  if (k < 0) throw DomainError("tightness gadget needs k >= 0");
  const int n = g_prime.order();
  if (n + k > kMaxVertices) throw LimitExceeded("tightness gadget would exceed 64 vertices");
  Graph g(n + k);
  for (auto [u, v] : g_prime.edges()) g.add_edge(u, v);
  auto classes = solve_chromatic(g_prime, g_prime.vertices()).colouring.classes();
  for (int i = 0; i < k; ++i) classes.push_back(VertexSet::singleton(n + i));
  return {g, ProperColoring(std::move(classes))};
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  std::vector<int> part;
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    if (part_sizes[i] < 0) throw DomainError("negative part size");
    n += part_sizes[i];
    part.insert(part.end(), static_cast<std::size_t>(part_sizes[i]), static_cast<int>(i));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  if (n1 + g2.order() > kMaxVertices) throw LimitExceeded("disjoint union exceeds 64 vertices");
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

Graph random_cycle_free_graph(int n, int ell, double density, std::mt19937_64& rng) {
  if (ell < 2) throw DomainError("random_cycle_free_graph: ell must be at least 2");
  auto pairs = graph6_pair_order(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (!keep(rng)) continue;
    if (has_path_of_length(g, u, v, ell)) continue;
    g.add_edge(u, v);
  }
  return g;
}

Graph random_graph(int n, double q, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(q);
  Graph g(n);
  for (auto [u, v] : graph6_pair_order(n)) {
    if (keep(rng)) g.add_edge(u, v);
  }
  return g;
}

}  // namespace chromadisc
