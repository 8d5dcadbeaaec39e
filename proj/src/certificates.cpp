#include "chromadisc/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "chromadisc/errors.hpp"

namespace chromadisc {

bool all_passed(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

namespace {

void require_proper_partition(const Graph& g, const ProperColoring& sigma) {
  if (!sigma.is_partition_of(g.vertices()) || !sigma.is_proper_on(g)) {
    throw DomainError("colouring is not a proper partition of the vertex set");
  }
}

std::uint64_t full_palette(int p) {
  return p >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
}

// Colour vector view used by the recursive construction; colours 0..p-1.
struct Colours {
  const Graph& g;
  std::vector<int> of;

  std::uint64_t palette(VertexSet s) const {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << of[static_cast<std::size_t>(v)];
    return m;
  }
  VertexSet cls(int c) const {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v) {
      if (of[static_cast<std::size_t>(v)] == c) s.insert(v);
    }
    return s;
  }
};

VertexSet rainbow_nbhd_step(Colours sigma, int p, int k, int target) {
  const Graph& g = sigma.g;
  if (k == 0) {
    for (int v : sigma.cls(target)) {
      if (std::popcount(sigma.palette(g.closed_neighbourhood(v))) == p) {
        return VertexSet::singleton(v);
      }
    }
    throw CertificateFailure(
        "optimal colouring has a class in which no vertex sees every colour");
  }

  // Make the requested class the last colour.
  const int last = p - 1;
  if (target != last) {
    for (int& c : sigma.of) {
      if (c == target) {
        c = last;
      } else if (c == last) {
        c = target;
      }
    }
  }
  const VertexSet top = sigma.cls(last);
  for (int v : top) {
    if (std::popcount(sigma.palette(g.neighbours(v))) >= p - 1) return VertexSet::singleton(v);
  }

  // Recolour the top class to the smallest colours missing around each vertex.
  Colours lowered = sigma;
  int j = -1;
  for (int v : top) {
    const std::uint64_t missing = ~sigma.palette(g.neighbours(v)) & full_palette(p - 1);
    if (missing == 0) throw CertificateFailure("top-class vertex cannot be recoloured");
    const int c = std::countr_zero(missing);
    lowered.of[static_cast<std::size_t>(v)] = c;
    j = std::max(j, c);
  }

  const VertexSet inner = rainbow_nbhd_step(lowered, p - 1, k - 1, j);

  const VertexSet coloured_j = inner & lowered.cls(j);
  if (coloured_j.empty()) throw CertificateFailure("inner set misses its requested class");
  const int u = coloured_j.first();
  int bridge = 0;
  if (top.contains(u)) {
    const VertexSet original_j = sigma.cls(j);
    if (original_j.empty()) throw CertificateFailure("colour class vanished");
    bridge = original_j.first();
  } else {
    const VertexSet moved_to_j = top & lowered.cls(j);
    bridge = moved_to_j.first();
  }
  VertexSet x = inner;
  x.insert(bridge);
  return x;
}

}  // namespace

std::vector<InvariantCheck> check_rainbow_nbhd(const Graph& g, const ProperColoring& sigma,
                                               int class_index, VertexSet x, int k) {
  const std::uint64_t covered = sigma.palette(g.closed_neighbourhood(x));
  return {
      {"size_at_most_k_plus_1", x.size() <= k + 1},
      {"closed_neighbourhood_sees_every_colour", covered == full_palette(sigma.size())},
      {"meets_requested_class", x.intersects(sigma.class_at(class_index))},
  };
}

RainbowNbhdCertificate rainbow_closed_neighbourhood(const Graph& g, const ProperColoring& sigma,
                                                    int class_index, int chi) {
  require_proper_partition(g, sigma);
  const int p = sigma.size();
  if (class_index < 0 || class_index >= p) throw DomainError("class index out of range");
  const int k = p - chi;
  if (k < 0) throw DomainError("colouring uses fewer colours than the chromatic number");

  std::vector<int> colours(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) colours[static_cast<std::size_t>(v)] = sigma.colour_of(v);
  const VertexSet x = rainbow_nbhd_step(Colours{g, std::move(colours)}, p, k, class_index);

  RainbowNbhdCertificate cert;
  cert.x = x;
  cert.p = p;
  cert.k = k;
  cert.covered = sigma.palette(g.closed_neighbourhood(x));
  cert.touched_class = class_index;
  cert.checks = check_rainbow_nbhd(g, sigma, class_index, x, k);
  return cert;
}

RainbowNbhdCertificate rainbow_closed_neighbourhood(const Graph& g, const ProperColoring& sigma,
                                                    int class_index) {
  return rainbow_closed_neighbourhood(g, sigma, class_index, chromatic_number(g));
}

BoundedCoverCertificate bounded_rainbow_cover(const Graph& g, const ProperColoring& sigma, int s,
                                              int chi) {
  if (s < 1) throw DomainError("bounded_rainbow_cover: s must be positive");
  const auto nbhd = rainbow_closed_neighbourhood(g, sigma, 0, chi);
  if (!nbhd.valid()) throw CertificateFailure("rainbow neighbourhood certificate is invalid");

  const VertexSet x = nbhd.x;
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  VertexSet done;
  int offset = 0;
  for (int v : x) {
    const VertexSet piece = g.neighbours(v) - done;
    // N[v] is s-colourable and v sees all of N(v), so N(v) needs s - 1.
    const ProperColoring local = colour_with_at_most(g, piece, s - 1);
    for (int u : piece) colour[static_cast<std::size_t>(u)] = offset + local.colour_of(u);
    done |= piece;
    offset += s - 1;
  }
  const VertexSet isolated_in_x = x - done;
  for (int u : isolated_in_x) colour[static_cast<std::size_t>(u)] = offset;

  BoundedCoverCertificate cert;
  cert.x = x;
  cert.cover = g.closed_neighbourhood(x);
  cert.cover_colouring = ProperColoring::from_colours(colour);
  cert.k = nbhd.k;
  cert.s = s;
  cert.bound = (s - 1) * (nbhd.k + 1) + 1;
  cert.checks = {
      {"colouring_is_proper", cert.cover_colouring.is_proper_on(g)},
      {"colouring_covers_closed_neighbourhood", cert.cover_colouring.is_partition_of(cert.cover)},
      {"colours_within_bound", cert.cover_colouring.size() <= cert.bound},
      {"cover_spans_every_colour", sigma.palette_size(cert.cover) == sigma.size()},
  };
  return cert;
}

BoundedCoverCertificate bounded_rainbow_cover(const Graph& g, const ProperColoring& sigma, int s) {
  return bounded_rainbow_cover(g, sigma, s, chromatic_number(g));
}

PigeonholeVertex pigeonhole_vertex(const Graph& g, const ProperColoring& sigma, int chi) {
  if (g.empty()) throw DomainError("pigeonhole_vertex on the empty graph");
  require_proper_partition(g, sigma);
  PigeonholeVertex best;
  best.palette = -1;
  for (int v = 0; v < g.order(); ++v) {
    const int pal = sigma.palette_size(g.closed_neighbourhood(v));
    if (pal > best.palette) {
      best.vertex = v;
      best.palette = pal;
    }
  }
  best.p = sigma.size();
  best.k = best.p - chi;
  return best;
}

PigeonholeVertex pigeonhole_vertex(const Graph& g, const ProperColoring& sigma) {
  return pigeonhole_vertex(g, sigma, chromatic_number(g));
}

RainbowISCertificate greedy_rainbow_independent_set(const Graph& g, const ProperColoring& sigma,
                                                    int s) {
  require_proper_partition(g, sigma);
  if (s < 1) throw DomainError("greedy_rainbow_independent_set: s must be positive");
  if (!is_r_locally_s_colourable(g, 1, s)) {
    throw LocalityViolation("graph is not locally " + std::to_string(s) + "-colourable");
  }
  VertexSet alive = g.vertices();
  VertexSet chosen;
  while (!alive.empty()) {
    const int v = alive.first();
    chosen.insert(v);
    alive -= g.closed_neighbourhood(v) | sigma.class_at(sigma.colour_of(v));
  }
  const int chi = chromatic_number(g);
  RainbowISCertificate cert;
  cert.independent_set = chosen;
  cert.guarantee = static_cast<double>(chi) / s;
  cert.vacuous = false;
  cert.checks = {
      {"independent", g.is_independent(chosen)},
      {"rainbow", sigma.is_rainbow(chosen)},
      {"size_at_least_chi_over_s", chosen.size() * s >= chi},
  };
  return cert;
}

double iterative_guarantee(int p, int k, int s1, int s2) {
  const double pd = p;
  const double exponent = 1.0 - 1.0 / (3.0 * s1 * s2);
  return pd - std::pow(pd, exponent) - (static_cast<double>(k) + 1.0) / s2 * std::cbrt(pd);
}

RainbowISCertificate iterative_rainbow_independent_set(const Graph& g, const ProperColoring& sigma,
                                                       int s1, int s2) {
  require_proper_partition(g, sigma);
  if (s1 < 2 || s2 < 2) throw DomainError("iterative extraction needs s1, s2 >= 2");
  if (!is_r_locally_s_colourable(g, 1, s1)) {
    throw LocalityViolation("graph is not 1-locally " + std::to_string(s1) + "-colourable");
  }
  if (!is_r_locally_s_colourable(g, 2, s2)) {
    throw LocalityViolation("graph is not 2-locally " + std::to_string(s2) + "-colourable");
  }

  ChromaticCache cache(g);
  const int p = sigma.size();
  const int k0 = p - cache.chromatic_number(g.vertices());

  RainbowISCertificate cert;
  cert.guarantee = iterative_guarantee(p, k0, s1, s2);
  cert.vacuous = cert.guarantee <= 0.0;

  VertexSet alive = g.vertices();
  VertexSet chosen;
  int p_i = p;
  for (int i = 0;; ++i) {
    const int chi_i = cache.chromatic_number(alive);
    const int k_i = p_i - chi_i;
    // (i) chosen is rainbow, independent, of size p - p_i.
    if (!g.is_independent(chosen) || !sigma.is_rainbow(chosen) || chosen.size() != p - p_i) {
      throw CertificateFailure("extracted set lost independence, rainbowness or size at round " +
                               std::to_string(i));
    }
    // (ii) the remaining graph avoids the used colours and N(chosen).
    if ((sigma.palette(alive) & sigma.palette(chosen)) != 0 ||
        alive.intersects(g.neighbours(chosen)) || sigma.palette_size(alive) > p_i) {
      throw CertificateFailure("remaining graph touches the extracted set at round " +
                               std::to_string(i));
    }
    // (iii) the colour surplus grows by at most s2 per round.
    if (k_i > k0 + i * s2) {
      throw CertificateFailure("colour surplus " + std::to_string(k_i) + " exceeds " +
                               std::to_string(k0 + i * s2) + " at round " + std::to_string(i));
    }
    if (alive.empty()) break;

    int pivot = alive.first();
    int pivot_palette = -1;
    for (int v : alive) {
      const int pal = sigma.palette_size(g.closed_neighbourhood(v) & alive);
      if (pal > pivot_palette) {
        pivot = v;
        pivot_palette = pal;
      }
    }
    if (pivot_palette * (k_i + 1) < p_i) {
      throw CertificateFailure("no vertex sees p_i / (k_i + 1) colours at round " +
                               std::to_string(i));
    }

    // One representative per colour around the pivot, split by an
    // s1-colouring of the closed neighbourhood; the largest part is a
    // rainbow independent set.
    const VertexSet around = g.closed_neighbourhood(pivot) & alive;
    const ProperColoring local = colour_with_at_most(g, around, s1);
    std::vector<VertexSet> parts(static_cast<std::size_t>(local.size()));
    std::uint64_t seen = 0;
    for (int v : around) {
      const std::uint64_t bit = std::uint64_t{1} << sigma.colour_of(v);
      if (seen & bit) continue;
      seen |= bit;
      parts[static_cast<std::size_t>(local.colour_of(v))].insert(v);
    }
    const VertexSet largest = *std::max_element(
        parts.begin(), parts.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
    const int formula = p_i / (s1 * (k_i + 1));
    const int take = std::max(1, formula);
    if (largest.size() < take) {
      throw CertificateFailure("rainbow independent part smaller than required at round " +
                               std::to_string(i));
    }
    VertexSet extracted;
    for (int v : largest) {
      if (extracted.size() == take) break;
      extracted.insert(v);
    }

    VertexSet classes_hit;
    for (int v : extracted) classes_hit |= sigma.class_at(sigma.colour_of(v));
    alive -= classes_hit | g.neighbours(extracted);
    chosen |= extracted;
    p_i -= take;
    cert.rounds.push_back({i, p_i + take, chi_i, k_i, pivot, pivot_palette, extracted, alive});
  }

  cert.independent_set = chosen;
  cert.checks = {
      {"independent", g.is_independent(chosen)},
      {"rainbow", sigma.is_rainbow(chosen)},
      {"size_meets_guarantee", static_cast<double>(chosen.size()) >= cert.guarantee},
  };
  return cert;
}

}  // namespace chromadisc
