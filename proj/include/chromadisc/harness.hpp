#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromadisc/graph.hpp"
#include "chromadisc/serialize.hpp"

namespace chromadisc {

enum class Verdict { kPass, kFail, kSkipped };
std::string_view to_string(Verdict v);

// Check identifiers accepted by the scanner, in report order.
const std::vector<std::string>& check_ids();
bool is_known_check(std::string_view id);
bool is_conjecture_check(std::string_view id);

// Size caps. Exact-discrepancy checks stop at 10 vertices except for the
// bundled Grotzsch graph.
inline constexpr int kDiscrepancyCap = 10;
inline constexpr int kLocalChromaticCap = 16;
inline constexpr int kNaiveRecheckCap = 10;

struct CheckOutcome {
  std::string id;
  std::string params;  // "s=3", "ell=4" or empty
  Verdict verdict = Verdict::kSkipped;
  std::string reason;  // skip reason, failure detail or regime note
  std::optional<int> margin;
  bool conjecture = false;
  bool candidate = false;  // conjecture failure confirmed by the naive definition
};

struct GraphClasses {
  bool triangle_free = false;
  bool c4_free = false;
  bool complete_multipartite = false;
  int local_s = 0;                  // max_v chi(B_1(v))
  std::optional<int> local2_s;      // max_v chi(B_2(v))
  std::vector<int> cycle_free_ells; // ell with no cycle of length ell + 1
};

struct GraphRecord {
  std::size_t index = 0;
  std::string graph6;
  int n = 0;
  int edges = 0;
  int chi = 0;
  int omega = 0;
  std::optional<int> psi;
  std::optional<int> phi;
  std::optional<int> phi_p;  // colours of the discrepancy witness
  std::optional<bool> witness_p_at_least_2chi;
  GraphClasses classes;
  std::vector<CheckOutcome> checks;
  double seconds = 0.0;
};

struct ScanOptions {
  std::vector<std::string> checks;  // empty = all
  std::vector<int> s_values;        // empty = max(2, exact local s) per graph
  std::vector<int> ell_values = {3, 4, 5, 6};
  int jobs = 1;
};

struct CheckTally {
  std::string id;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

struct Finding {
  std::size_t index = 0;
  std::string graph6;
  std::string check;
  std::string params;
  std::string detail;
};

struct Report {
  std::vector<GraphRecord> graphs;
  std::vector<CheckTally> tallies;
  std::vector<Finding> proven_failures;
  std::vector<Finding> conjecture_candidates;
  int jobs = 1;
  double runtime_seconds = 0.0;

  // 0 all proven checks pass, 1 a proven check failed, 3 a conjecture
  // candidate was found (and nothing proven failed).
  int exit_code() const;
};

// Throws DomainError on unknown ids or invalid parameters.
void validate(const ScanOptions& options);

GraphRecord evaluate_graph(const Graph& g, const ScanOptions& options, std::size_t index = 0);

// Verdicts are independent of options.jobs; records keep input order.
Report scan_corpus(const std::vector<Graph>& corpus, const ScanOptions& options);

// All labeled graphs with 1..max_n vertices.
std::vector<Graph> exhaustive_corpus(int max_n);

Json to_json(const GraphRecord& record);
Json to_json(const Report& report);
// One summary row per graph, with a header line.
std::string report_csv(const Report& report);

struct HuntOptions {
  std::string conjecture = "conj1.8";  // or conj1.7
  int ell = 3;
  int budget = 100;
};

struct HuntFindings {
  std::string conjecture;
  int ell = 0;
  int examined = 0;
  int rejected = 0;        // contained C_{ell+1}
  int skipped = 0;         // excluded graph or over the size cap
  std::map<int, int> margins;  // margin -> count
  std::vector<Finding> candidates;
  std::vector<Finding> disagreements;  // fast and naive discrepancy differ
};

// Pulls up to budget graphs from source (stops early on nullopt) and
// records phi - bound for the C_{ell+1}-free ones.
HuntFindings counterexample_hunt(const std::function<std::optional<Graph>()>& source,
                                 const HuntOptions& options);

Json to_json(const HuntFindings& findings);

}  // namespace chromadisc
