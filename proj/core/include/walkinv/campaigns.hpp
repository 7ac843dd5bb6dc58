#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace walkinv {

/// Aggregate outcome of one verification sweep. Exact quantities inside
/// `details` are fraction strings.
struct CampaignResult {
  std::string name;
  std::size_t max_n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;  // first few, in enumeration order
  nlohmann::json details = nlohmann::json::object();
  bool inconclusive = false;

  bool passed() const noexcept { return failures == 0; }
};

inline constexpr std::size_t kMaxFailureSamples = 20;

/// Every labelled tree 2 <= n <= max_n: walk-cost identities per vertex and
/// pair, index identities per tree.
CampaignResult tree_identity_campaign(std::size_t max_n);

/// Every connected graph 2 <= n <= max_n (<= 7): both hitting-time routes,
/// commute and return times, cost formulas, Kemeny constancy, the
/// neighbourhood identity, regular-iff-constant-CC, resistance metric.
CampaignResult general_graph_campaign(std::size_t max_n);

/// Spectral identities and P(u,v) coefficient relations on every connected
/// graph n <= max_n plus random_count random graphs 3 <= n <= random_max_n.
CampaignResult spectral_campaign(std::size_t max_n, std::size_t random_count = 100, std::size_t random_max_n = 12,
                                 std::uint64_t seed = 20240601);

/// Extremal certificates for 2 <= n <= max_n (<= 8), plus the two-sided
/// hitting bound with its equality characterisations on every tree pair.
CampaignResult extremal_campaign(std::size_t max_n);

/// Six-way agreement on trees n <= tree_max_n; (ii)/(iii)/(iv) agreement
/// and totality of (iii) on connected graphs n <= graph_max_n. A bound of 0
/// skips that half.
CampaignResult preorder_campaign(std::size_t tree_max_n, std::size_t graph_max_n);

/// Witness search for the three non-tree failure modes. Missing witnesses
/// count as failures unless allow_inconclusive is set, in which case the
/// result is marked inconclusive instead.
CampaignResult counterexample_campaign(std::size_t max_n, bool allow_inconclusive = false);

struct MonteCarloSettings {
  std::size_t hitting_cases = 50;
  std::size_t hitting_max_n = 8;
  std::size_t walks = 10000;
  double hitting_sigmas = 4.0;
  double hitting_pass_fraction = 0.95;
  std::size_t cover_max_n = 8;
  double cover_sigmas = 3.0;
  std::uint64_t seed = 7;
};

/// Simulated hitting and cover times against the exact engine.
CampaignResult monte_carlo_campaign(const MonteCarloSettings& settings = {});

}  // namespace walkinv
