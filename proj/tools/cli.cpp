#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "walkinv/campaigns.hpp"
#include "walkinv/error.hpp"
#include "walkinv/graph_io.hpp"
#include "walkinv/report.hpp"
#include "walkinv/verify.hpp"

namespace walkinv::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kSuites = {"trees", "graphs", "spectral", "extremal", "counterexamples", "montecarlo"};

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::FormulaMismatch:
    case ErrorCode::Truncation:
    case ErrorCode::SingularMatrix:
      return false;
    default:
      return true;
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json run_report(const std::string& command, json inputs, double seconds, json results, bool passed, json summary) {
  summary["passed"] = passed;
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"timing", {{"seconds", seconds}}},
          {"results", std::move(results)},
          {"summary", std::move(summary)}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::ParseError, "failed writing " + path);
}

/// Report goes to json_path when given (with a one-line summary on out),
/// otherwise to out.
void emit(const json& report, const std::string& json_path, std::ostream& out) {
  if (json_path.empty()) {
    out << dump_report(report);
    return;
  }
  write_file(json_path, dump_report(report));
  out << report["command"].get<std::string>() << ": " << (report["summary"]["passed"].get<bool>() ? "PASS" : "FAIL")
      << " (" << json_path << ")\n";
}

struct InvariantsArgs {
  std::string graph_file;
  std::string json_path;
};

int cmd_invariants(const InvariantsArgs& a, std::ostream& out) {
  Stopwatch clock;
  const Graph g = read_edge_list(a.graph_file);
  json results = invariants_report(g);
  const double seconds = clock.seconds();
  emit(run_report("invariants", {{"graph_file", a.graph_file}}, seconds, std::move(results), true,
                  {{"n", g.order()}, {"m", g.size()}}),
       a.json_path, out);
  return kExitPass;
}

struct VerifyArgs {
  std::string suite;
  std::size_t max_n = 0;
  bool allow_inconclusive = false;
  std::size_t random_count = 100;
  std::size_t random_max_n = 12;
  std::uint64_t seed = 7;
  std::size_t walks = 10000;
  std::string json_path;
};

std::vector<CampaignResult> run_suite(const VerifyArgs& a) {
  const std::size_t k = a.max_n;
  if (a.suite == "trees") return {tree_identity_campaign(k), preorder_campaign(k, 0)};
  if (a.suite == "graphs") return {general_graph_campaign(k), preorder_campaign(0, k)};
  if (a.suite == "spectral") return {spectral_campaign(k, a.random_count, a.random_max_n, a.seed)};
  if (a.suite == "extremal") return {extremal_campaign(k)};
  if (a.suite == "counterexamples") return {counterexample_campaign(k, a.allow_inconclusive)};
  MonteCarloSettings s;
  s.hitting_max_n = k;
  s.cover_max_n = std::min(k, kMaxExactCoverOrder);
  s.walks = a.walks;
  s.seed = a.seed;
  return {monte_carlo_campaign(s)};
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Stopwatch clock;
  const std::vector<CampaignResult> campaigns = run_suite(a);
  const double seconds = clock.seconds();
  bool passed = true;
  bool inconclusive = false;
  std::uint64_t graphs = 0, checks = 0, failures = 0;
  for (const CampaignResult& c : campaigns) {
    passed = passed && c.passed();
    inconclusive = inconclusive || c.inconclusive;
    graphs += c.graphs;
    checks += c.checks;
    failures += c.failures;
  }
  json inputs = {{"suite", a.suite}, {"max_n", a.max_n}, {"allow_inconclusive", a.allow_inconclusive}};
  if (a.suite == "spectral") {
    inputs["random_count"] = a.random_count;
    inputs["random_max_n"] = a.random_max_n;
  }
  if (a.suite == "spectral" || a.suite == "montecarlo") inputs["seed"] = a.seed;
  if (a.suite == "montecarlo") inputs["walks"] = a.walks;
  emit(run_report("verify", std::move(inputs), seconds, json(campaigns), passed,
                  {{"graphs", graphs}, {"checks", checks}, {"failures", failures}, {"inconclusive", inconclusive}}),
       a.json_path, out);
  return passed ? kExitPass : kExitCheckFailure;
}

struct ScalingArgs {
  std::vector<std::size_t> sizes;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t walks = 1;
  std::string csv_path;
  std::string json_path;
};

int cmd_scaling(const ScalingArgs& a, std::ostream& out) {
  Stopwatch clock;
  const std::vector<ScalingRow> rows = scaling_experiment(a.sizes, a.samples, a.seed, a.walks);
  const double seconds = clock.seconds();
  const std::string csv = scaling_csv(rows);

  double cc_min = std::numeric_limits<double>::infinity(), cc_max = 0.0;
  double ratio_min = std::numeric_limits<double>::infinity(), ratio_max = 0.0;
  for (const ScalingRow& r : rows) {
    cc_min = std::min(cc_min, r.cc_norm_mean);
    cc_max = std::max(cc_max, r.cc_norm_mean);
    const double ratio = r.ct_norm_mean / r.cc_norm_mean;
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }
  json summary = {{"rows", rows.size()},
                  {"cc_norm_spread", cc_max / cc_min},
                  {"ct_over_cc_min", ratio_min},
                  {"ct_over_cc_max", ratio_max}};
  const json report = run_report(
      "scaling", {{"sizes", a.sizes}, {"samples", a.samples}, {"seed", a.seed}, {"walks_per_tree", a.walks}}, seconds,
      json(rows), true, summary);

  if (a.csv_path.empty()) {
    out << csv;
  } else {
    write_file(a.csv_path, csv);
  }
  if (!a.json_path.empty()) write_file(a.json_path, dump_report(report));
  if (!a.csv_path.empty() || !a.json_path.empty()) {
    std::ostringstream line;
    line.precision(4);
    line << "scaling: " << rows.size() << " rows; cc_norm spread " << cc_max / cc_min << "; n*CT/CC in ["
         << ratio_min << ", " << ratio_max << "]\n";
    out << line.str();
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random-walk and resistance invariants of small graphs"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "Compute all invariants of an edge-list graph");
  invariants->add_option("graph_file", inv.graph_file, "Edge-list file: 'n m' then m lines 'u v'")->required();
  invariants->add_option("--json", inv.json_path, "Write the JSON report here instead of stdout");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--suite", ver.suite, "Campaign to run")->required()->check(CLI::IsMember(kSuites));
  verify->add_option("--max-n", ver.max_n, "Largest order enumerated")->required();
  verify->add_flag("--allow-inconclusive", ver.allow_inconclusive,
                   "Counterexamples: accept missing witnesses as inconclusive");
  verify->add_option("--random-count", ver.random_count, "Spectral: number of random graphs")->capture_default_str();
  verify->add_option("--random-max-n", ver.random_max_n, "Spectral: largest random order")->capture_default_str();
  verify->add_option("--seed", ver.seed, "Seed for random instances")->capture_default_str();
  verify->add_option("--walks", ver.walks, "Monte Carlo: walks per estimate")->capture_default_str();
  verify->add_option("--json", ver.json_path, "Write the JSON report here instead of stdout");

  ScalingArgs sc;
  auto* scaling = app.add_subcommand("scaling", "Random-tree cover-cost scaling experiment");
  scaling->add_option("--sizes", sc.sizes, "Comma-separated tree orders")->required()->delimiter(',');
  scaling->add_option("--samples", sc.samples, "Random trees per size")->capture_default_str();
  scaling->add_option("--seed", sc.seed, "Experiment seed")->capture_default_str();
  scaling->add_option("--walks", sc.walks, "Simulated cover walks per tree")->capture_default_str();
  scaling->add_option("--csv", sc.csv_path, "Write the CSV table here instead of stdout");
  scaling->add_option("--json", sc.json_path, "Also write a JSON report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*invariants) return cmd_invariants(inv, out);
    if (*verify) return cmd_verify(ver, out);
    return cmd_scaling(sc, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInputError : kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace walkinv::cli
