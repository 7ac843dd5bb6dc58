// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all eight
//   acceptance --criterion N   run criterion N only (exit status reflects it)

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "walkinv/campaigns.hpp"
#include "walkinv/error.hpp"
#include "walkinv/verify.hpp"

using namespace walkinv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string campaign_detail(const CampaignResult& r) {
  std::ostringstream s;
  s << r.name << " graphs=" << r.graphs << " checks=" << r.checks << " failures=" << r.failures;
  if (!r.failure_samples.empty()) s << " first=\"" << r.failure_samples.front() << "\"";
  return s.str();
}

Outcome from_campaigns(std::initializer_list<CampaignResult> results) {
  Outcome o{true, ""};
  for (const CampaignResult& r : results) {
    o.pass = o.pass && r.passed() && !r.inconclusive;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += campaign_detail(r);
  }
  return o;
}

Outcome criterion_1() { return from_campaigns({tree_identity_campaign(7)}); }
Outcome criterion_2() { return from_campaigns({general_graph_campaign(6)}); }
Outcome criterion_3() { return from_campaigns({spectral_campaign(5, 100, 12, 20240601)}); }
Outcome criterion_4() { return from_campaigns({extremal_campaign(7)}); }
Outcome criterion_5() { return from_campaigns({preorder_campaign(7, 6)}); }
Outcome criterion_6() { return from_campaigns({counterexample_campaign(7, false)}); }

Outcome criterion_7() {
  const CampaignResult r = monte_carlo_campaign();
  Outcome o = from_campaigns({r});
  o.detail += " hitting_fraction=" + r.details["hitting_fraction"].dump();
  return o;
}

Outcome criterion_8() {
  const std::vector<std::size_t> sizes{64, 256, 1024};
  const std::vector<ScalingRow> rows = scaling_experiment(sizes, 200, 1);
  double cc_min = INFINITY, cc_max = 0, ratio_min = INFINITY, ratio_max = 0;
  for (const ScalingRow& r : rows) {
    cc_min = std::min(cc_min, r.cc_norm_mean);
    cc_max = std::max(cc_max, r.cc_norm_mean);
    const double ratio = r.ct_norm_mean / r.cc_norm_mean;
    ratio_min = std::min(ratio_min, ratio);
    ratio_max = std::max(ratio_max, ratio);
  }
  const double spread = cc_max / cc_min;
  const bool spread_ok = spread < 2.0;
  const bool ratio_ok = ratio_min >= 0.2 && ratio_max <= 5.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "cc_norm spread=%.4f (<2 %s); n*CT/CC in [%.4f, %.4f] (within [0.2, 5] %s)", spread,
                spread_ok ? "ok" : "violated", ratio_min, ratio_max, ratio_ok ? "ok" : "violated");
  return {spread_ok && ratio_ok, buf};
}

const std::vector<std::function<Outcome()>> kCriteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                         criterion_5, criterion_6, criterion_7, criterion_8};

bool run_one(std::size_t index) {
  Outcome o;
  try {
    o = kCriteria[index - 1]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << "criterion " << index << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    bool all = true;
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) all = run_one(i) && all;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
  }
  if (args.size() == 2 && args[0] == "--criterion") {
    char* end = nullptr;
    const unsigned long n = std::strtoul(args[1].c_str(), &end, 10);
    if (*end == '\0' && n >= 1 && n <= kCriteria.size()) return run_one(n) ? EXIT_SUCCESS : EXIT_FAILURE;
  }
  std::cerr << "usage: acceptance [--criterion 1.." << kCriteria.size() << "]\n";
  return 2;
}
