// chromadisc: scan graph corpora for chromatic-discrepancy statements,
// generate the extremal constructions, and print exact discrepancies and
// ball colourings.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chromadisc/ball_coloring.hpp"
#include "chromadisc/constructions.hpp"
#include "chromadisc/discrepancy.hpp"
#include "chromadisc/errors.hpp"
#include "chromadisc/graph6.hpp"
#include "chromadisc/harness.hpp"
#include "chromadisc/serialize.hpp"

namespace cd = chromadisc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<cd::Graph> read_corpus(const std::string& path) {
  if (path == "-") return cd::read_graph6_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return cd::read_graph6_stream(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

int default_jobs() {
  if (const char* env = std::getenv("CHROMADISC_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CHROMADISC_JOBS='" << env << "'\n";
  }
  return 1;
}

struct ScanArgs {
  std::string input;
  int exhaustive = 0;
  std::vector<std::string> checks;
  std::vector<int> s_values;
  std::vector<int> ell_values = {3, 4, 5, 6};
  int jobs = default_jobs();
  std::string out;
  std::string csv;
  bool quiet = false;
};

int run_scan(const ScanArgs& args) {
  cd::ScanOptions options;
  options.checks = args.checks;
  options.s_values = args.s_values;
  options.ell_values = args.ell_values;
  options.jobs = args.jobs;
  cd::validate(options);

  const auto corpus = args.exhaustive > 0 ? cd::exhaustive_corpus(args.exhaustive)
                                          : read_corpus(args.input);
  const cd::Report report = cd::scan_corpus(corpus, options);
  if (!args.out.empty()) write_file(args.out, cd::to_json(report).dump(2) + "\n");
  if (!args.csv.empty()) write_file(args.csv, cd::report_csv(report));

  if (!args.quiet) {
    std::cout << "graphs: " << report.graphs.size() << "  jobs: " << report.jobs
              << "  runtime: " << report.runtime_seconds << "s\n";
    for (const auto& t : report.tallies) {
      std::cout << "  " << t.id << ": pass " << t.pass << ", fail " << t.fail << ", skipped "
                << t.skipped << '\n';
    }
    for (const auto& f : report.proven_failures) {
      std::cout << "FAILURE " << f.check << (f.params.empty() ? "" : " " + f.params) << " on #"
                << f.index << " " << f.graph6 << ": " << f.detail << '\n';
    }
    for (const auto& f : report.conjecture_candidates) {
      std::cout << "CANDIDATE " << f.check << (f.params.empty() ? "" : " " + f.params) << " on #"
                << f.index << " " << f.graph6 << ": " << f.detail << '\n';
    }
  }
  return report.exit_code();
}

struct GenArgs {
  std::string family;
  int k = 4;
  int s = 2;
  int n = 5;
  std::string base = "K3";
  std::string sidecar;
};

cd::Graph named_graph(const std::string& name) {
  if (name == "K3") return cd::complete_graph(3);
  if (name == "C5") return cd::cycle_graph(5);
  if (name == "petersen") return cd::petersen_graph();
  return cd::parse_graph6(name);
}

int run_gen(const GenArgs& args) {
  cd::Graph g;
  cd::Json sidecar;
  if (args.family == "mycielski") {
    const auto c = cd::mycielski(args.k);
    g = c.graph;
    sidecar = cd::to_json(c);
  } else if (args.family == "myc") {
    const auto c = cd::generalized_mycielski(args.k, args.s);
    g = c.graph;
    sidecar = cd::to_json(c);
  } else if (args.family == "gadget") {
    const auto gadget = cd::lemma34_tightness_gadget(named_graph(args.base), args.k);
    g = gadget.graph;
    sidecar = {{"k", args.k}, {"classes", cd::to_json(gadget.colouring)}};
  } else if (args.family == "petersen") {
    g = cd::petersen_graph();
  } else if (args.family == "cycle") {
    g = cd::cycle_graph(args.n);
  } else if (args.family == "complete") {
    g = cd::complete_graph(args.n);
  } else {
    throw cd::DomainError("unknown family '" + args.family + "'");
  }
  std::cout << cd::write_graph6(g) << '\n';
  if (!args.sidecar.empty()) {
    if (sidecar.is_null()) throw cd::DomainError("family '" + args.family + "' has no colouring");
    write_file(args.sidecar, sidecar.dump(2) + "\n");
  }
  return kExitOk;
}

int run_phi(const std::string& input) {
  for (const auto& g : read_corpus(input)) {
    if (g.empty()) {
      std::cout << cd::Json{{"error", "empty graph"}}.dump() << '\n';
      continue;
    }
    std::cout << cd::to_json(cd::chromatic_discrepancy(g)).dump() << '\n';
  }
  return kExitOk;
}

int run_ball(const std::string& input, int ell, std::optional<int> center) {
  int status = kExitOk;
  for (const auto& g : read_corpus(input)) {
    try {
      if (center) {
        if (*center < 0 || *center >= g.order()) throw cd::DomainError("center out of range");
        std::cout << cd::to_json(cd::colour_ball(g, *center, ell)).dump() << '\n';
        continue;
      }
      for (int v = 0; v < g.order(); ++v) {
        std::cout << cd::to_json(cd::colour_ball(g, v, ell)).dump() << '\n';
      }
    } catch (const cd::CycleRefusal& e) {
      std::cout << cd::Json{{"error", e.what()}, {"cycle", e.cycle()}}.dump() << '\n';
      status = kExitInput;
    }
  }
  return status;
}

struct HuntArgs {
  std::string input;
  std::string conjecture = "conj1.8";
  int ell = 4;
  int budget = 200;
  int n = 8;
  double density = 0.5;
  std::uint64_t seed = 1;
};

int run_hunt(const HuntArgs& args) {
  cd::HuntOptions options{args.conjecture, args.ell, args.budget};
  std::function<std::optional<cd::Graph>()> source;
  std::vector<cd::Graph> corpus;
  std::size_t next = 0;
  std::mt19937_64 rng(args.seed);
  if (!args.input.empty()) {
    corpus = read_corpus(args.input);
    source = [&]() -> std::optional<cd::Graph> {
      if (next >= corpus.size()) return std::nullopt;
      return corpus[next++];
    };
  } else {
    source = [&]() -> std::optional<cd::Graph> {
      return cd::random_cycle_free_graph(args.n, args.ell, args.density, rng);
    };
  }
  const auto findings = cd::counterexample_hunt(source, options);
  std::cout << cd::to_json(findings).dump(2) << '\n';
  if (!findings.disagreements.empty()) return 1;
  return findings.candidates.empty() ? kExitOk : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic discrepancy toolkit"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Check statements over a graph corpus");
  auto* input_opt = scan_cmd->add_option("--input", scan.input, "graph6 file, one graph per line ('-' for stdin)");
  auto* exhaustive_opt = scan_cmd->add_option("--exhaustive", scan.exhaustive,
                                              "all labeled graphs on 1..N vertices")
                             ->check(CLI::Range(1, cd::kMaxExhaustiveOrder));
  input_opt->excludes(exhaustive_opt);
  scan_cmd->add_option("--checks", scan.checks, "comma-separated check ids")->delimiter(',');
  scan_cmd->add_option("--s", scan.s_values, "values of s (default: exact local s per graph)")
      ->delimiter(',');
  scan_cmd->add_option("--ell", scan.ell_values, "values of ell")->delimiter(',');
  scan_cmd->add_option("--jobs", scan.jobs, "worker threads (default $CHROMADISC_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scan.out, "JSON report path");
  scan_cmd->add_option("--csv", scan.csv, "CSV summary path");
  scan_cmd->add_flag("--quiet", scan.quiet, "no summary on stdout");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a construction in graph6");
  gen_cmd->add_option("family", gen.family, "mycielski | myc | gadget | petersen | cycle | complete")
      ->required();
  gen_cmd->add_option("--k", gen.k, "level (mycielski, myc) or extra colours (gadget)");
  gen_cmd->add_option("--s", gen.s, "base clique size (myc)");
  gen_cmd->add_option("--n", gen.n, "order (cycle, complete)");
  gen_cmd->add_option("--base", gen.base, "gadget base graph: K3, C5, petersen or graph6");
  gen_cmd->add_option("--sidecar", gen.sidecar, "write the distinguished colouring as JSON");

  std::string phi_input;
  auto* phi_cmd = app.add_subcommand("phi", "Exact chromatic discrepancy with witness");
  phi_cmd->add_option("--input", phi_input, "graph6 file ('-' for stdin)")->required();

  std::string ball_input;
  int ball_ell = 2;
  std::optional<int> ball_center;
  auto* ball_cmd = app.add_subcommand("ball", "Colour balls of radius floor(ell/2)");
  ball_cmd->add_option("--input", ball_input, "graph6 file ('-' for stdin)")->required();
  ball_cmd->add_option("--ell", ball_ell, "forbidden cycle length minus one")->required();
  ball_cmd->add_option("--center", ball_center, "single center (default: every vertex)");

  HuntArgs hunt;
  auto* hunt_cmd = app.add_subcommand("hunt", "Search for counterexamples to a cycle conjecture");
  hunt_cmd->add_option("--conjecture", hunt.conjecture, "conj1.7 or conj1.8");
  hunt_cmd->add_option("--ell", hunt.ell, "ell");
  hunt_cmd->add_option("--budget", hunt.budget, "graphs to draw");
  hunt_cmd->add_option("--input", hunt.input, "graph6 corpus instead of random graphs");
  hunt_cmd->add_option("--n", hunt.n, "order of random graphs");
  hunt_cmd->add_option("--density", hunt.density, "edge keep probability");
  hunt_cmd->add_option("--seed", hunt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*scan_cmd) {
      if (scan.input.empty() && scan.exhaustive == 0) {
        throw cd::DomainError("scan needs --input or --exhaustive");
      }
      return run_scan(scan);
    }
    if (*gen_cmd) return run_gen(gen);
    if (*phi_cmd) return run_phi(phi_input);
    if (*ball_cmd) return run_ball(ball_input, ball_ell, ball_center);
    if (*hunt_cmd) return run_hunt(hunt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const cd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
