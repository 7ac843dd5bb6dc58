#include <gtest/gtest.h>

#include "walkinv/campaigns.hpp"
#include "walkinv/error.hpp"
#include "walkinv/graph.hpp"

using namespace walkinv;

namespace {

void expect_clean(const CampaignResult& r) {
  EXPECT_TRUE(r.passed()) << r.name;
  EXPECT_EQ(r.failures, 0u);
  EXPECT_TRUE(r.failure_samples.empty());
  EXPECT_FALSE(r.inconclusive);
  EXPECT_GE(r.checks, r.graphs);
}

}  // namespace

TEST(Campaigns, TreesUpToFive) {
  const CampaignResult r = tree_identity_campaign(5);
  expect_clean(r);
  EXPECT_EQ(r.name, "trees");
  EXPECT_EQ(r.graphs, 1u + 3u + 16u + 125u);
  EXPECT_EQ(r.details["trees_per_n"]["5"], 125);
}

TEST(Campaigns, GraphsUpToFour) {
  const CampaignResult r = general_graph_campaign(4);
  expect_clean(r);
  EXPECT_EQ(r.graphs, 1u + 4u + 38u);
}

TEST(Campaigns, SpectralSmall) {
  const CampaignResult r = spectral_campaign(4, 5, 7, 99);
  expect_clean(r);
  EXPECT_EQ(r.graphs, 1u + 4u + 38u + 5u);
  EXPECT_EQ(r.details["random_graphs"], 5);
}

TEST(Campaigns, ExtremalUpToSix) {
  const CampaignResult r = extremal_campaign(6);
  expect_clean(r);
  EXPECT_EQ(r.details["certificates"].size(), 5u * 6u);
}

TEST(Campaigns, PreordersSmall) {
  const CampaignResult r = preorder_campaign(6, 5);
  expect_clean(r);
  EXPECT_TRUE(r.details.contains("graph_disagreements"));
  // (ii), (iii), (iv) never disagree on graphs.
  EXPECT_EQ(r.details["graph_disagreements"]["ii-iii"], 0);
  EXPECT_EQ(r.details["graph_disagreements"]["iii-iv"], 0);
  // Centrality and cover cost already split on some 4-vertex graph.
  EXPECT_GT(r.details["graph_disagreements"]["i-ii"].get<int>(), 0);
}

TEST(Campaigns, PreorderHalvesCanBeSkipped) {
  const CampaignResult trees_only = preorder_campaign(4, 0);
  expect_clean(trees_only);
  EXPECT_FALSE(trees_only.details.contains("graph_disagreements"));
  EXPECT_EQ(trees_only.graphs, 1u + 3u + 16u);
}

TEST(Campaigns, CounterexamplesAtSeven) {
  const CampaignResult r = counterexample_campaign(7);
  expect_clean(r);
  EXPECT_EQ(r.details["witnesses"].size(), 3u);
  EXPECT_TRUE(r.details["missing"].empty());
}

TEST(Campaigns, MonteCarloReduced) {
  MonteCarloSettings s;
  s.hitting_cases = 10;
  s.hitting_max_n = 6;
  s.walks = 4000;
  s.cover_max_n = 6;
  const CampaignResult r = monte_carlo_campaign(s);
  EXPECT_TRUE(r.passed()) << (r.failure_samples.empty() ? "" : r.failure_samples.front());
  EXPECT_GE(r.details["hitting_fraction"].get<double>(), s.hitting_pass_fraction);
}

TEST(Campaigns, RangeChecks) {
  EXPECT_THROW(tree_identity_campaign(1), Error);
  EXPECT_THROW(general_graph_campaign(8), Error);
  EXPECT_THROW(extremal_campaign(9), Error);
  EXPECT_THROW(counterexample_campaign(2), Error);
}
