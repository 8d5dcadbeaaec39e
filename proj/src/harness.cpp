#include "chromadisc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <sstream>
#include <thread>

#include "chromadisc/ball_coloring.hpp"
#include "chromadisc/certificates.hpp"
#include "chromadisc/coloring.hpp"
#include "chromadisc/constructions.hpp"
#include "chromadisc/discrepancy.hpp"
#include "chromadisc/errors.hpp"
#include "chromadisc/graph6.hpp"

namespace chromadisc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {
      "thm1.1", "thm1.2", "thm1.8", "thm1.9", "thm3.3", "prop2.1", "prop2.2", "lem3.4", "lem4.3",
      "lem4.4", "lem5.1", "lem5.3", "thm7.1", "lem7.3", "conj1.5", "conj1.7", "conj1.8"};
  return ids;
}

bool is_known_check(std::string_view id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_conjecture_check(std::string_view id) { return id.starts_with("conj"); }

int Report::exit_code() const {
  if (!proven_failures.empty()) return 1;
  if (!conjecture_candidates.empty()) return 3;
  return 0;
}

void validate(const ScanOptions& options) {
  for (const auto& id : options.checks) {
    if (!is_known_check(id)) throw DomainError("unknown check id '" + id + "'");
  }
  for (int s : options.s_values) {
    if (s < 2) throw DomainError("s must be at least 2");
  }
  for (int ell : options.ell_values) {
    if (ell < 2) throw DomainError("ell must be at least 2");
  }
  if (options.jobs < 1) throw DomainError("jobs must be at least 1");
}

namespace {

const Graph& groetzsch() {
  static const Graph g = mycielski(4).graph;
  return g;
}

// Lazily computed quantities shared by the checks of one graph.
class Context {
 public:
  Context(const Graph& g, const ScanOptions& options) : g_(g), options_(options), cache_(g) {
    chi_ = cache_.chromatic_number(g.vertices());
  }

  const Graph& graph() const { return g_; }
  int n() const { return g_.order(); }
  int chi() const { return chi_; }
  ChromaticCache& cache() { return cache_; }

  int local_s() {
    if (!local_s_) local_s_ = local_colourability(g_, 1);
    return *local_s_;
  }

  std::vector<int> s_values() {
    if (!options_.s_values.empty()) return options_.s_values;
    return {std::max(2, local_s())};
  }

  bool cycle_free(int ell) {
    auto it = cycle_free_.find(ell);
    if (it == cycle_free_.end()) it = cycle_free_.emplace(ell, !has_cycle_of_length(g_, ell + 1)).first;
    return it->second;
  }

  // Empty string when exact discrepancy is affordable, else the skip reason.
  std::string discrepancy_cap_reason() const {
    if (n() <= kDiscrepancyCap) return {};
    if (g_ == groetzsch()) return {};
    return "n=" + std::to_string(n()) + " exceeds the exact-discrepancy cap of " +
           std::to_string(kDiscrepancyCap);
  }

  const DiscrepancyResult& phi() {
    if (!phi_) phi_ = chromatic_discrepancy(g_);
    return *phi_;
  }
  bool has_phi() const { return phi_.has_value(); }

  // Partition-based checks share the discrepancy cap.
  std::string partition_cap_reason() const { return discrepancy_cap_reason(); }

 private:
  const Graph& g_;
  const ScanOptions& options_;
  ChromaticCache cache_;
  int chi_ = 0;
  std::optional<int> local_s_;
  std::map<int, bool> cycle_free_;
  std::optional<DiscrepancyResult> phi_;
};

CheckOutcome make(std::string id, std::string params = {}) {
  CheckOutcome out;
  out.conjecture = is_conjecture_check(id);
  out.id = std::move(id);
  out.params = std::move(params);
  return out;
}

CheckOutcome skip(CheckOutcome out, std::string reason) {
  out.verdict = Verdict::kSkipped;
  out.reason = std::move(reason);
  return out;
}

// lhs >= rhs with margin lhs - rhs.
CheckOutcome compare(CheckOutcome out, int lhs, int rhs, const std::string& what) {
  out.margin = lhs - rhs;
  out.verdict = lhs >= rhs ? Verdict::kPass : Verdict::kFail;
  if (out.verdict == Verdict::kFail) {
    out.reason = what + ": " + std::to_string(lhs) + " < " + std::to_string(rhs);
  }
  return out;
}

std::string s_param(int s) { return "s=" + std::to_string(s); }
std::string ell_param(int ell) { return "ell=" + std::to_string(ell); }

bool is_complete_on(const Graph& g, int order) { return g.order() == order && g.is_complete(); }

// phi >= chi - d for a proven bound, after scope filtering by the caller.
CheckOutcome phi_lower_bound(Context& ctx, CheckOutcome out, int d) {
  if (auto reason = ctx.discrepancy_cap_reason(); !reason.empty()) return skip(out, reason);
  return compare(std::move(out), ctx.phi().phi, ctx.chi() - d, "phi below chi - " + std::to_string(d));
}

// Conjectured bound: a failure is reported only if the naive definition
// agrees; disagreement is an implementation bug.
CheckOutcome phi_conjecture(Context& ctx, CheckOutcome out, int d) {
  out = phi_lower_bound(ctx, std::move(out), d);
  if (out.verdict != Verdict::kFail) return out;
  if (ctx.n() > kNaiveRecheckCap) {
    out.conjecture = false;
    out.reason += "; naive recheck unaffordable, treated as an internal error";
    return out;
  }
  const int naive = naive_chromatic_discrepancy(ctx.graph());
  if (naive != ctx.phi().phi) {
    out.conjecture = false;
    out.reason += "; naive discrepancy " + std::to_string(naive) + " disagrees";
    return out;
  }
  out.candidate = true;
  out.reason += "; confirmed by the naive definition";
  return out;
}

void run_thm1_1(Context& ctx, std::vector<CheckOutcome>& out) {
  auto o = make("thm1.1");
  if (!is_triangle_free(ctx.graph())) return out.push_back(skip(o, "not triangle-free"));
  out.push_back(phi_lower_bound(ctx, o, 2));
}

void run_thm1_2(Context& ctx, std::vector<CheckOutcome>& out) {
  for (int s : ctx.s_values()) {
    auto o = make("thm1.2", s_param(s));
    if (ctx.local_s() > s) {
      out.push_back(skip(o, "not locally " + std::to_string(s) + "-colourable"));
    } else if (6 * ctx.chi() >= 11 * s + 16) {
      out.push_back(skip(o, "chi too large for the proven range"));
    } else {
      out.push_back(phi_lower_bound(ctx, o, s));
    }
  }
}

void run_thm1_8(Context& ctx, std::vector<CheckOutcome>& out) {
  auto o = make("thm1.8");
  if (!ctx.cycle_free(3)) return out.push_back(skip(o, "contains C4"));
  if (is_complete_on(ctx.graph(), 3)) return out.push_back(skip(o, "excluded graph K3"));
  out.push_back(phi_lower_bound(ctx, o, 2));
}

void run_thm1_9(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    if (ell < 3) continue;
    auto o = make("thm1.9", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
    } else if (is_complete_on(ctx.graph(), ell)) {
      out.push_back(skip(o, "excluded graph K" + std::to_string(ell)));
    } else if (3 * ctx.chi() >= 5 * ell + 2) {
      out.push_back(skip(o, "chi too large for the proven range"));
    } else {
      out.push_back(phi_lower_bound(ctx, o, ell - 1));
    }
  }
}

void run_thm3_3(Context& ctx, std::vector<CheckOutcome>& out) {
  const int s = std::max(2, ctx.local_s());
  auto o = make("thm3.3", s_param(s));
  if (auto reason = ctx.partition_cap_reason(); !reason.empty()) return out.push_back(skip(o, reason));
  int worst = std::numeric_limits<int>::max();
  for (int p = ctx.chi(); p <= ctx.n(); ++p) {
    const int bound = (s - 1) * (p - ctx.chi() + 1) + 1;
    const int f = f_value(ctx.cache(), p).f;
    if (bound - f < worst) {
      worst = bound - f;
      o.reason = "p=" + std::to_string(p);
    }
    if (f > bound) {
      o.verdict = Verdict::kFail;
      o.margin = bound - f;
      o.reason = "f(" + std::to_string(p) + ")=" + std::to_string(f) + " exceeds " +
                 std::to_string(bound);
      return out.push_back(o);
    }
  }
  o.verdict = Verdict::kPass;
  o.margin = worst;
  o.reason.clear();
  out.push_back(o);
}

void run_prop2_1(Context& ctx, std::vector<CheckOutcome>& out) {
  auto o = make("prop2.1");
  if (auto reason = ctx.discrepancy_cap_reason(); !reason.empty()) return out.push_back(skip(o, reason));
  if (ctx.n() < 2) return out.push_back(skip(o, "no proper nonempty induced subgraph"));
  const int phi = ctx.phi().phi;
  int worst = std::numeric_limits<int>::max();
  for (int v = 0; v < ctx.n(); ++v) {
    const Graph h = induced_subgraph(ctx.graph(), ctx.graph().vertices() - VertexSet::singleton(v));
    const int sub = chromatic_discrepancy(h).phi;
    if (phi - sub < worst) worst = phi - sub;
    if (sub > phi) {
      o.reason = "deleting vertex " + std::to_string(v) + " raises phi to " + std::to_string(sub);
      break;
    }
  }
  o.margin = worst;
  o.verdict = worst >= 0 ? Verdict::kPass : Verdict::kFail;
  out.push_back(o);
}

void run_prop2_2(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    auto o = make("prop2.2", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
      continue;
    }
    int worst = 0;
    for (int v = 0; v < ctx.n(); ++v) {
      worst = std::max(worst, degeneracy(ctx.graph(), ctx.graph().neighbours(v)).value);
    }
    out.push_back(compare(o, ell - 2, worst, "neighbourhood degeneracy above ell - 2"));
  }
}

// Runs visit over every proper partition with chi..n classes.
template <typename Visit>
void for_all_partitions(Context& ctx, Visit visit) {
  for (int p = ctx.chi(); p <= ctx.n(); ++p) {
    enumerate_proper_partitions(ctx.graph(), p, visit);
  }
}

void run_lem3_4(Context& ctx, std::vector<CheckOutcome>& out) {
  auto o = make("lem3.4");
  if (auto reason = ctx.partition_cap_reason(); !reason.empty()) return out.push_back(skip(o, reason));
  long certificates = 0;
  for_all_partitions(ctx, [&](const ProperColoring& sigma) {
    for (int c = 0; c < sigma.size(); ++c) {
      try {
        const auto cert = rainbow_closed_neighbourhood(ctx.graph(), sigma, c, ctx.chi());
        ++certificates;
        if (!cert.valid()) {
          o.reason = "invalid certificate for class " + std::to_string(c);
          return false;
        }
      } catch (const CertificateFailure& e) {
        o.reason = e.what();
        return false;
      }
    }
    return true;
  });
  o.verdict = o.reason.empty() ? Verdict::kPass : Verdict::kFail;
  if (o.verdict == Verdict::kPass) o.reason = std::to_string(certificates) + " certificates";
  out.push_back(o);
}

void run_lem5_3(Context& ctx, std::vector<CheckOutcome>& out) {
  auto o = make("lem5.3");
  if (auto reason = ctx.partition_cap_reason(); !reason.empty()) return out.push_back(skip(o, reason));
  int worst = std::numeric_limits<int>::max();
  for_all_partitions(ctx, [&](const ProperColoring& sigma) {
    const auto v = pigeonhole_vertex(ctx.graph(), sigma, ctx.chi());
    worst = std::min(worst, v.palette * (v.k + 1) - v.p);
    return true;
  });
  o.margin = worst;
  o.verdict = worst >= 0 ? Verdict::kPass : Verdict::kFail;
  if (o.verdict == Verdict::kFail) o.reason = "palette times (k+1) below p";
  out.push_back(o);
}

void run_size_lemmas(Context& ctx, const std::string& id, std::vector<CheckOutcome>& out) {
  const int n = ctx.n();
  const int chi = ctx.chi();
  for (int s : ctx.s_values()) {
    auto o = make(id, s_param(s));
    if (ctx.local_s() > s) {
      out.push_back(skip(o, "not locally " + std::to_string(s) + "-colourable"));
      continue;
    }
    if (id == "lem4.3") {
      out.push_back(compare(o, std::max(s, 3 * n / 5), chi, "chi above max(s, 3n/5)"));
    } else if (id == "lem4.4") {
      out.push_back(compare(o, std::max(s + 1, 6 * n / 11), chi, "chi above max(s+1, 6n/11)"));
    } else {
      out.push_back(compare(o, 2 * s * n, chi * chi, "chi squared above 2sn"));
    }
  }
}

void run_thm7_1(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    auto o = make("thm7.1", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
      continue;
    }
    int worst = std::numeric_limits<int>::max();
    try {
      for (int v = 0; v < ctx.n() && o.reason.empty(); ++v) {
        const BallColoring bc = colour_ball(ctx.graph(), v, ell);
        std::vector<int> colours(bc.colours);
        for (int& c : colours) --c;
        const ProperColoring as_partition = ProperColoring::from_colours(colours);
        if (!as_partition.is_proper_on(ctx.graph()) || !as_partition.is_partition_of(bc.ball)) {
          o.reason = "ball colouring at " + std::to_string(v) + " is not proper";
        }
        const int exact = ctx.cache().chromatic_number(bc.ball);
        worst = std::min({worst, 2 * ell - bc.colours_used(), 2 * ell - exact});
      }
    } catch (const CertificateFailure& e) {
      o.reason = e.what();
    }
    if (o.reason.empty() && worst < 0) o.reason = "ball needs more than 2*ell colours";
    o.margin = worst;
    o.verdict = o.reason.empty() ? Verdict::kPass : Verdict::kFail;
    out.push_back(o);
  }
}

void run_lem7_3(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    auto o = make("lem7.3", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
      continue;
    }
    int worst = 0;
    for (int v = 0; v < ctx.n(); ++v) {
      for (const auto& layer : layer_degeneracy_report(ctx.graph(), v, ell)) {
        worst = std::max(worst, layer.degeneracy);
      }
    }
    out.push_back(compare(o, layer_degeneracy_bound(ell), worst, "layer degeneracy above ell - 1"));
  }
}

void run_conj1_5(Context& ctx, std::vector<CheckOutcome>& out) {
  for (int s : ctx.s_values()) {
    auto o = make("conj1.5", s_param(s));
    if (ctx.local_s() > s) {
      out.push_back(skip(o, "not locally " + std::to_string(s) + "-colourable"));
      continue;
    }
    const bool proven = 6 * ctx.chi() < 11 * s + 16;
    o = phi_conjecture(ctx, o, s);
    if (o.verdict != Verdict::kSkipped) {
      o.reason = std::string(proven ? "proven regime" : "open regime") +
                 (o.reason.empty() ? "" : "; " + o.reason);
    }
    out.push_back(o);
  }
}

void run_conj1_7(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    auto o = make("conj1.7", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
    } else {
      out.push_back(phi_conjecture(ctx, o, ell));
    }
  }
}

void run_conj1_8(Context& ctx, const ScanOptions& options, std::vector<CheckOutcome>& out) {
  for (int ell : options.ell_values) {
    if (ell < 3) continue;
    auto o = make("conj1.8", ell_param(ell));
    if (!ctx.cycle_free(ell)) {
      out.push_back(skip(o, "contains C" + std::to_string(ell + 1)));
    } else if (is_complete_on(ctx.graph(), ell)) {
      out.push_back(skip(o, "excluded graph K" + std::to_string(ell)));
    } else {
      out.push_back(phi_conjecture(ctx, o, ell - 1));
    }
  }
}

void run_check(const std::string& id, Context& ctx, const ScanOptions& options,
               std::vector<CheckOutcome>& out) {
  if (id == "thm1.1") return run_thm1_1(ctx, out);
  if (id == "thm1.2") return run_thm1_2(ctx, out);
  if (id == "thm1.8") return run_thm1_8(ctx, out);
  if (id == "thm1.9") return run_thm1_9(ctx, options, out);
  if (id == "thm3.3") return run_thm3_3(ctx, out);
  if (id == "prop2.1") return run_prop2_1(ctx, out);
  if (id == "prop2.2") return run_prop2_2(ctx, options, out);
  if (id == "lem3.4") return run_lem3_4(ctx, out);
  if (id == "lem4.3" || id == "lem4.4" || id == "lem5.1") return run_size_lemmas(ctx, id, out);
  if (id == "lem5.3") return run_lem5_3(ctx, out);
  if (id == "thm7.1") return run_thm7_1(ctx, options, out);
  if (id == "lem7.3") return run_lem7_3(ctx, options, out);
  if (id == "conj1.5") return run_conj1_5(ctx, out);
  if (id == "conj1.7") return run_conj1_7(ctx, options, out);
  if (id == "conj1.8") return run_conj1_8(ctx, options, out);
  throw DomainError("unknown check id '" + id + "'");
}

GraphClasses classify(Context& ctx, const ScanOptions& options) {
  const Graph& g = ctx.graph();
  GraphClasses c;
  c.triangle_free = is_triangle_free(g);
  c.c4_free = ctx.cycle_free(3);
  c.complete_multipartite = is_complete_multipartite(g);
  c.local_s = ctx.local_s();
  if (g.order() <= kLocalChromaticCap) c.local2_s = local_colourability(g, 2);
  for (int ell : options.ell_values) {
    if (ctx.cycle_free(ell)) c.cycle_free_ells.push_back(ell);
  }
  return c;
}

}  // namespace

GraphRecord evaluate_graph(const Graph& g, const ScanOptions& options, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  GraphRecord rec;
  rec.index = index;
  rec.graph6 = write_graph6(g);
  rec.n = g.order();
  rec.edges = g.edge_count();
  const auto& ids = options.checks.empty() ? check_ids() : options.checks;
  if (g.empty()) {
    for (const auto& id : ids) rec.checks.push_back(skip(make(id), "empty graph"));
    return rec;
  }

  Context ctx(g, options);
  rec.chi = ctx.chi();
  rec.omega = clique_number(g);
  if (g.order() <= kLocalChromaticCap) rec.psi = local_chromatic_number(g);
  rec.classes = classify(ctx, options);

  for (const auto& id : ids) {
    const std::size_t before = rec.checks.size();
    try {
      run_check(id, ctx, options, rec.checks);
    } catch (const LimitExceeded& e) {
      rec.checks.resize(before);
      rec.checks.push_back(skip(make(id), e.what()));
    } catch (const Error& e) {
      rec.checks.resize(before);
      auto o = make(id);
      o.verdict = Verdict::kFail;
      o.conjecture = false;
      o.reason = std::string("aborted: ") + e.what();
      rec.checks.push_back(o);
    }
  }
  if (ctx.has_phi()) {
    rec.phi = ctx.phi().phi;
    rec.phi_p = ctx.phi().p;
    rec.witness_p_at_least_2chi = ctx.phi().p >= 2 * rec.chi;
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

Report scan_corpus(const std::vector<Graph>& corpus, const ScanOptions& options) {
  validate(options);
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.jobs = options.jobs;
  report.graphs.resize(corpus.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      report.graphs[i] = evaluate_graph(corpus[i], options, i);
    }
  };
  const int workers = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(options.jobs), std::max<std::size_t>(corpus.size(), 1)));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  const auto& ids = options.checks.empty() ? check_ids() : options.checks;
  for (const auto& id : ids) report.tallies.push_back({id});
  for (const auto& rec : report.graphs) {
    for (const auto& c : rec.checks) {
      auto it = std::find_if(report.tallies.begin(), report.tallies.end(),
                             [&](const CheckTally& t) { return t.id == c.id; });
      if (c.verdict == Verdict::kPass) ++it->pass;
      if (c.verdict == Verdict::kSkipped) ++it->skipped;
      if (c.verdict != Verdict::kFail) continue;
      ++it->fail;
      Finding f{rec.index, rec.graph6, c.id, c.params, c.reason};
      if (!c.conjecture) {
        report.proven_failures.push_back(std::move(f));
      } else if (c.candidate) {
        report.conjecture_candidates.push_back(std::move(f));
      }
    }
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Graph> exhaustive_corpus(int max_n) {
  if (max_n > kMaxExhaustiveOrder) {
    throw LimitExceeded("exhaustive enumeration is limited to " +
                        std::to_string(kMaxExhaustiveOrder) + " vertices");
  }
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    enumerate_labeled_graphs(n, [&](const Graph& g) {
      out.push_back(g);
      return true;
    });
  }
  return out;
}

namespace {

Json to_json(const CheckOutcome& c) {
  Json out = {{"id", c.id}, {"verdict", to_string(c.verdict)}};
  if (!c.params.empty()) out["params"] = c.params;
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (c.margin) out["margin"] = *c.margin;
  if (c.conjecture) out["conjecture"] = true;
  if (c.candidate) out["candidate"] = true;
  return out;
}

Json to_json(const Finding& f) {
  Json out = {{"index", f.index}, {"graph6", f.graph6}, {"check", f.check}, {"detail", f.detail}};
  if (!f.params.empty()) out["params"] = f.params;
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const GraphRecord& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"index", r.index},
          {"graph6", r.graph6},
          {"n", r.n},
          {"edges", r.edges},
          {"chi", r.chi},
          {"omega", r.omega},
          {"psi", optional_json(r.psi)},
          {"phi", optional_json(r.phi)},
          {"phi_witness_p", optional_json(r.phi_p)},
          {"witness_p_at_least_2chi", optional_json(r.witness_p_at_least_2chi)},
          {"classes",
           {{"triangle_free", r.classes.triangle_free},
            {"c4_free", r.classes.c4_free},
            {"complete_multipartite", r.classes.complete_multipartite},
            {"local_s", r.classes.local_s},
            {"local2_s", optional_json(r.classes.local2_s)},
            {"cycle_free_ells", r.classes.cycle_free_ells}}},
          {"checks", checks},
          {"seconds", r.seconds}};
}

Json to_json(const Report& report) {
  Json graphs = Json::array();
  for (const auto& g : report.graphs) graphs.push_back(to_json(g));
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    tallies.push_back({{"id", t.id}, {"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}});
  }
  Json failures = Json::array();
  for (const auto& f : report.proven_failures) failures.push_back(to_json(f));
  Json candidates = Json::array();
  for (const auto& f : report.conjecture_candidates) candidates.push_back(to_json(f));
  bool large_witness = false;
  for (const auto& g : report.graphs) large_witness |= g.witness_p_at_least_2chi.value_or(false);
  return {{"graphs", graphs},
          {"summary",
           {{"graph_count", report.graphs.size()},
            {"checks", tallies},
            {"proven_failures", failures},
            {"conjecture_candidates", candidates},
            {"any_witness_p_at_least_2chi", large_witness},
            {"jobs", report.jobs},
            {"runtime_seconds", report.runtime_seconds},
            {"exit_code", report.exit_code()}}}};
}

std::string report_csv(const Report& report) {
  std::ostringstream out;
  out << "index,graph6,n,edges,chi,omega,psi,phi,pass,fail,skipped,failed_checks\n";
  for (const auto& r : report.graphs) {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    std::string failed;
    for (const auto& c : r.checks) {
      if (c.verdict == Verdict::kPass) ++pass;
      if (c.verdict == Verdict::kSkipped) ++skipped;
      if (c.verdict == Verdict::kFail) {
        ++fail;
        if (!failed.empty()) failed += ';';
        failed += c.params.empty() ? c.id : c.id + "[" + c.params + "]";
      }
    }
    // graph6 characters lie in '?'..'~', so no quoting is needed.
    out << r.index << ',' << r.graph6 << ',' << r.n << ',' << r.edges << ',' << r.chi << ','
        << r.omega << ',' << (r.psi ? std::to_string(*r.psi) : "") << ','
        << (r.phi ? std::to_string(*r.phi) : "") << ',' << pass << ',' << fail << ','
        << skipped << ',' << failed << '\n';
  }
  return out.str();
}

HuntFindings counterexample_hunt(const std::function<std::optional<Graph>()>& source,
                                 const HuntOptions& options) {
  if (options.conjecture != "conj1.7" && options.conjecture != "conj1.8") {
    throw DomainError("hunt supports conj1.7 and conj1.8");
  }
  const bool strong = options.conjecture == "conj1.8";
  if (options.ell < (strong ? 3 : 2)) throw DomainError("ell too small for " + options.conjecture);

  HuntFindings out;
  out.conjecture = options.conjecture;
  out.ell = options.ell;
  for (int i = 0; i < options.budget; ++i) {
    const auto g = source();
    if (!g) break;
    if (g->empty()) {
      ++out.skipped;
      continue;
    }
    if (has_cycle_of_length(*g, options.ell + 1)) {
      ++out.rejected;
      continue;
    }
    if ((strong && is_complete_on(*g, options.ell)) ||
        (g->order() > kDiscrepancyCap && !(*g == groetzsch()))) {
      ++out.skipped;
      continue;
    }
    ++out.examined;
    const int chi = chromatic_number(*g);
    const int phi = chromatic_discrepancy(*g).phi;
    const int margin = phi - (chi - options.ell + (strong ? 1 : 0));
    ++out.margins[margin];
    if (margin >= 0) continue;
    Finding f{static_cast<std::size_t>(i), write_graph6(*g), options.conjecture,
              ell_param(options.ell), "phi=" + std::to_string(phi) + " chi=" + std::to_string(chi)};
    if (g->order() <= kNaiveRecheckCap && naive_chromatic_discrepancy(*g) == phi) {
      out.candidates.push_back(std::move(f));
    } else {
      out.disagreements.push_back(std::move(f));
    }
  }
  return out;
}

Json to_json(const HuntFindings& findings) {
  Json margins = Json::object();
  for (const auto& [m, count] : findings.margins) margins[std::to_string(m)] = count;
  Json candidates = Json::array();
  for (const auto& f : findings.candidates) candidates.push_back(to_json(f));
  Json disagreements = Json::array();
  for (const auto& f : findings.disagreements) disagreements.push_back(to_json(f));
  return {{"conjecture", findings.conjecture},
          {"ell", findings.ell},
          {"examined", findings.examined},
          {"rejected_with_cycle", findings.rejected},
          {"skipped", findings.skipped},
          {"margins", margins},
          {"candidates", candidates},
          {"disagreements", disagreements}};
}

}  // namespace chromadisc
