#include <random>
#include <sstream>

#include "doctest.h"

#include "chromadisc/constructions.hpp"
#include "chromadisc/errors.hpp"
#include "chromadisc/graph6.hpp"
#include "chromadisc/harness.hpp"

using namespace chromadisc;

namespace {

const CheckOutcome& find(const GraphRecord& rec, const std::string& id, const std::string& params = {}) {
  for (const auto& c : rec.checks) {
    if (c.id == id && c.params == params) return c;
  }
  FAIL("missing check " << id << " " << params);
  throw std::logic_error("unreachable");
}

std::vector<std::string> verdicts(const Report& r) {
  std::vector<std::string> out;
  for (const auto& g : r.graphs) {
    for (const auto& c : g.checks) {
      out.push_back(g.graph6 + c.id + c.params + std::string(to_string(c.verdict)) + c.reason);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("check ids") {
  CHECK(check_ids().size() == 17);
  CHECK(is_known_check("lem7.3"));
  CHECK_FALSE(is_known_check("lem7.7"));
  CHECK(is_conjecture_check("conj1.5"));
  CHECK_FALSE(is_conjecture_check("thm1.1"));
  ScanOptions bad;
  bad.checks = {"thm9.9"};
  CHECK_THROWS_AS(validate(bad), DomainError);
  ScanOptions bad_s;
  bad_s.s_values = {1};
  CHECK_THROWS_AS(validate(bad_s), DomainError);
}

TEST_CASE("records for named graphs") {
  const ScanOptions options;
  SUBCASE("five-cycle") {
    const auto rec = evaluate_graph(cycle_graph(5), options);
    CHECK(rec.chi == 3);
    CHECK(rec.omega == 2);
    CHECK(rec.psi == 3);
    CHECK(rec.phi == 1);
    CHECK(rec.witness_p_at_least_2chi == false);
    CHECK(rec.classes.triangle_free);
    CHECK(rec.classes.local_s == 2);
    CHECK(rec.classes.cycle_free_ells == std::vector<int>{3, 5, 6});
    CHECK(find(rec, "thm1.1").verdict == Verdict::kPass);
    CHECK(find(rec, "thm1.1").margin == 0);
    CHECK(find(rec, "thm1.9", "ell=4").verdict == Verdict::kSkipped);
    for (const auto& c : rec.checks) CHECK(c.verdict != Verdict::kFail);
  }
  SUBCASE("K3 is excluded from the C4-free statement") {
    const auto rec = evaluate_graph(complete_graph(3), options);
    CHECK(find(rec, "thm1.8").verdict == Verdict::kSkipped);
    CHECK(find(rec, "conj1.8", "ell=3").verdict == Verdict::kSkipped);
    CHECK(find(rec, "thm1.1").reason == "not triangle-free");
  }
  SUBCASE("Grotzsch stays within the discrepancy cap") {
    const auto rec = evaluate_graph(mycielski(4).graph, options);
    CHECK(rec.phi == 2);
    CHECK(find(rec, "thm1.1").verdict == Verdict::kPass);
  }
  SUBCASE("larger graphs are skipped, not dropped") {
    const auto rec = evaluate_graph(mycielski(5).graph, options);
    CHECK_FALSE(rec.phi.has_value());
    CHECK(find(rec, "thm1.1").verdict == Verdict::kSkipped);
    CHECK(find(rec, "lem4.3", "s=2").verdict == Verdict::kPass);
  }
  SUBCASE("empty graph") {
    const auto rec = evaluate_graph(Graph(), options);
    CHECK(rec.checks.size() == check_ids().size());
    for (const auto& c : rec.checks) CHECK(c.verdict == Verdict::kSkipped);
  }
  SUBCASE("explicit s list") {
    ScanOptions s_options;
    s_options.checks = {"conj1.5", "thm1.2"};
    s_options.s_values = {2, 3};
    const auto rec = evaluate_graph(complete_graph(3), s_options);
    CHECK(find(rec, "conj1.5", "s=2").verdict == Verdict::kSkipped);
    CHECK(find(rec, "conj1.5", "s=3").verdict == Verdict::kPass);
    CHECK(find(rec, "conj1.5", "s=3").reason == "proven regime");
    CHECK(find(rec, "thm1.2", "s=3").verdict == Verdict::kPass);
  }
}

TEST_CASE("scan over all graphs with at most five vertices") {
  ScanOptions options;
  const auto corpus = exhaustive_corpus(5);
  CHECK(corpus.size() == 1 + 2 + 8 + 64 + 1024);
  const Report report = scan_corpus(corpus, options);
  CHECK(report.proven_failures.empty());
  CHECK(report.conjecture_candidates.empty());
  CHECK(report.exit_code() == 0);
  for (const auto& t : report.tallies) {
    CHECK(t.fail == 0);
    CHECK(t.pass > 0);
  }
}

TEST_CASE("verdicts do not depend on the number of workers") {
  std::mt19937_64 rng(81);
  std::vector<Graph> corpus;
  for (int i = 0; i < 120; ++i) corpus.push_back(random_graph(1 + static_cast<int>(rng() % 8), 0.4, rng));
  ScanOptions options;
  options.jobs = 1;
  const auto one = scan_corpus(corpus, options);
  options.jobs = 3;
  const auto three = scan_corpus(corpus, options);
  CHECK(verdicts(one) == verdicts(three));
  for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(three.graphs[i].index == i);
}

TEST_CASE("report serialization") {
  ScanOptions options;
  options.checks = {"thm1.1", "lem4.3"};
  const Report report = scan_corpus({cycle_graph(5), complete_graph(4)}, options);
  const Json j = to_json(report);
  CHECK(j["graphs"].size() == 2);
  CHECK(j["graphs"][0]["graph6"] == "Dhc");
  CHECK(j["graphs"][0]["phi"] == 1);
  CHECK(j["graphs"][0]["checks"][0]["verdict"] == "pass");
  CHECK(j["graphs"][1]["checks"][0]["reason"] == "not triangle-free");
  CHECK(j["summary"]["exit_code"] == 0);
  CHECK(j["summary"]["checks"][0]["id"] == "thm1.1");
  const std::string csv = report_csv(report);
  std::istringstream lines(csv);
  std::string header;
  std::string first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "index,graph6,n,edges,chi,omega,psi,phi,pass,fail,skipped,failed_checks");
  CHECK(first == "0,Dhc,5,5,3,2,3,1,2,0,0,");
}

TEST_CASE("exit codes") {
  Report r;
  CHECK(r.exit_code() == 0);
  r.conjecture_candidates.push_back({});
  CHECK(r.exit_code() == 3);
  r.proven_failures.push_back({});
  CHECK(r.exit_code() == 1);
}

TEST_CASE("counterexample hunt") {
  SUBCASE("C4-free graphs up to six vertices") {
    auto corpus = exhaustive_corpus(6);
    std::size_t next = 0;
    HuntOptions options{"conj1.8", 3, static_cast<int>(corpus.size())};
    const auto findings = counterexample_hunt(
        [&]() -> std::optional<Graph> {
          if (next == corpus.size()) return std::nullopt;
          return corpus[next++];
        },
        options);
    CHECK(findings.candidates.empty());
    CHECK(findings.disagreements.empty());
    CHECK(findings.examined > 0);
    CHECK(findings.rejected > 0);
    CHECK(findings.margins.begin()->first >= 0);
  }
  SUBCASE("K_ell is skipped") {
    bool served = false;
    const auto findings = counterexample_hunt(
        [&]() -> std::optional<Graph> {
          if (served) return std::nullopt;
          served = true;
          return complete_graph(4);
        },
        {"conj1.8", 4, 5});
    CHECK(findings.skipped == 1);
    CHECK(findings.examined == 0);
  }
  SUBCASE("random C5-free graphs record margins") {
    std::mt19937_64 rng(82);
    const auto findings = counterexample_hunt(
        [&]() -> std::optional<Graph> { return random_cycle_free_graph(8, 4, 0.6, rng); },
        {"conj1.7", 4, 30});
    CHECK(findings.examined == 30);
    int total = 0;
    for (const auto& [margin, count] : findings.margins) total += count;
    CHECK(total == 30);
    CHECK(to_json(findings)["examined"] == 30);
  }
  CHECK_THROWS_AS(counterexample_hunt([] { return std::optional<Graph>(); }, {"conj1.5", 3, 1}),
                  DomainError);
}
