#include "walkinv/verify.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "walkinv/error.hpp"
#include "walkinv/invariants.hpp"
#include "walkinv/parallel.hpp"
#include "walkinv/simulate.hpp"

namespace walkinv {

std::string_view to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Centrality: return "i";
    case Ordering::WeightedCentrality: return "ii";
    case Ordering::Hitting: return "iii";
    case Ordering::WeightedReverseCost: return "iv";
    case Ordering::ReverseCost: return "v";
    case Ordering::CoverCost: return "vi";
  }
  return "?";
}

bool PreorderProfile::precedes(Ordering o, Vertex x, Vertex y) const {
  switch (o) {
    case Ordering::Centrality: return centrality[x] <= centrality[y];
    case Ordering::WeightedCentrality: return weighted_centrality[x] <= weighted_centrality[y];
    case Ordering::Hitting: return hitting(y, x) <= hitting(x, y);
    case Ordering::WeightedReverseCost: return weighted_reverse_cost[x] <= weighted_reverse_cost[y];
    case Ordering::ReverseCost: return reverse_cost[x] <= reverse_cost[y];
    case Ordering::CoverCost: return cover_cost[x] >= cover_cost[y];
  }
  return false;
}

PreorderProfile preorder_profile(const GraphAnalysis& a) {
  return {a.vinv.R, a.vinv.R_pi, a.hit, a.costs.rc_pi, a.costs.rc, a.costs.cc};
}

PreorderProfile preorder_profile(const Graph& g) { return preorder_profile(analyze(g)); }

bool orderings_agree(const PreorderProfile& profile, Ordering a, Ordering b) {
  const std::size_t n = profile.order();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (profile.precedes(a, x, y) != profile.precedes(b, x, y)) return false;
  return true;
}

EquivalenceMatrix preorder_equivalences(const PreorderProfile& profile) {
  EquivalenceMatrix eq{};
  for (std::size_t i = 0; i < kOrderingCount; ++i) {
    eq[i][i] = true;
    for (std::size_t j = i + 1; j < kOrderingCount; ++j) {
      eq[i][j] = eq[j][i] = orderings_agree(profile, kAllOrderings[i], kAllOrderings[j]);
    }
  }
  return eq;
}

EquivalenceMatrix preorder_equivalences(const Graph& g) { return preorder_equivalences(preorder_profile(g)); }

bool is_total_preorder(const PreorderProfile& profile, Ordering o) {
  const std::size_t n = profile.order();
  for (Vertex x = 0; x < n; ++x) {
    if (!profile.precedes(o, x, x)) return false;
    for (Vertex y = 0; y < n; ++y) {
      if (!profile.precedes(o, x, y) && !profile.precedes(o, y, x)) return false;
      if (!profile.precedes(o, x, y)) continue;
      for (Vertex z = 0; z < n; ++z)
        if (profile.precedes(o, y, z) && !profile.precedes(o, x, z)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(FailureMode mode) noexcept {
  switch (mode) {
    case FailureMode::RegularNonConstantR: return "regular_nonconstant_R";
    case FailureMode::EqualRUnequalRPi: return "equal_R_unequal_R_pi";
    case FailureMode::ReverseCostVsWeighted: return "reverse_cost_vs_weighted";
  }
  return "?";
}

namespace {

struct Centralities {
  std::vector<Rational> R;
  std::vector<Rational> R_pi;
};

Centralities resistance_centralities(const Graph& g) {
  const ResistanceMatrix res = resistance_matrix(g);
  const std::size_t n = g.order();
  Centralities c{std::vector<Rational>(n), std::vector<Rational>(n)};
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w) {
      c.R[v] += res(v, w);
      c.R_pi[v] += static_cast<unsigned long>(g.degree(w)) * res(v, w);
    }
  return c;
}

bool reverse_cost_condition(const Rational& delta_r, const Rational& delta_r_pi) {
  return delta_r > delta_r_pi && delta_r_pi > 0;
}

CounterexampleWitness make_witness(FailureMode mode, const Graph& g, const Centralities& c, Vertex x, Vertex y,
                                   std::string source) {
  Ordering first = Ordering::Centrality;
  Ordering second = Ordering::WeightedCentrality;
  if (mode == FailureMode::RegularNonConstantR) {
    first = Ordering::CoverCost;
    second = Ordering::Centrality;
  } else if (mode == FailureMode::ReverseCostVsWeighted) {
    first = Ordering::ReverseCost;
    second = Ordering::WeightedReverseCost;
  }
  return {mode, g, x, y, c.R[x], c.R[y], c.R_pi[x], c.R_pi[y], first, second, std::move(source)};
}

/// Searches one graph for each wanted mode; returns witnesses found.
std::vector<CounterexampleWitness> scan_graph(const Graph& g, const std::array<bool, 3>& wanted) {
  std::vector<CounterexampleWitness> found;
  const bool regular = g.is_regular();
  if (!wanted[1] && !wanted[2] && !(wanted[0] && regular)) return found;
  const Centralities c = resistance_centralities(g);
  const std::size_t n = g.order();
  const std::string source = "exhaustive n=" + std::to_string(n);
  bool got[3] = {false, false, false};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      if (wanted[0] && !got[0] && regular && c.R[x] < c.R[y]) {
        found.push_back(make_witness(FailureMode::RegularNonConstantR, g, c, x, y, source));
        got[0] = true;
      }
      if (wanted[1] && !got[1] && x < y && c.R[x] == c.R[y] && c.R_pi[x] != c.R_pi[y]) {
        found.push_back(make_witness(FailureMode::EqualRUnequalRPi, g, c, x, y, source));
        got[1] = true;
      }
      if (wanted[2] && !got[2] && reverse_cost_condition(c.R[x] - c.R[y], c.R_pi[y] - c.R_pi[x])) {
        found.push_back(make_witness(FailureMode::ReverseCostVsWeighted, g, c, x, y, source));
        got[2] = true;
      }
    }
  }
  return found;
}

}  // namespace

BrushEvaluation evaluate_brush(std::size_t k, std::size_t p, std::size_t l) {
  const CliquePathStar brush = clique_path_star(k, p, l);
  const Graph& g = brush.graph;
  const auto from_x = resistances_from(g, brush.x);
  const auto from_y = resistances_from(g, brush.y);
  BrushEvaluation eval;
  eval.k = k;
  eval.p = p;
  eval.l = l;
  Rational r_x = 0, r_y = 0, r_pi_x = 0, r_pi_y = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto d = static_cast<unsigned long>(g.degree(w));
    r_x += from_x[w];
    r_y += from_y[w];
    r_pi_x += d * from_x[w];
    r_pi_y += d * from_y[w];
  }
  eval.delta_R = r_x - r_y;
  eval.delta_R_pi = r_pi_y - r_pi_x;
  eval.condition = reverse_cost_condition(eval.delta_R, eval.delta_R_pi);
  return eval;
}

bool confirm_witness(const CounterexampleWitness& w) {
  const PreorderProfile profile = preorder_profile(w.graph);
  if (profile.centrality[w.x] != w.R_x || profile.centrality[w.y] != w.R_y) return false;
  if (profile.weighted_centrality[w.x] != w.R_pi_x || profile.weighted_centrality[w.y] != w.R_pi_y) return false;
  return profile.precedes(w.first, w.x, w.y) != profile.precedes(w.second, w.x, w.y) ||
         profile.precedes(w.first, w.y, w.x) != profile.precedes(w.second, w.y, w.x);
}

CounterexampleReport find_counterexamples(std::size_t max_n) {
  if (max_n < 3) throw Error(ErrorCode::SizeTooSmall, "counterexample search needs max_n >= 3");
  if (max_n > kMaxGraphEnumerationOrder) {
    throw Error(ErrorCode::NTooLarge, "counterexample search limited to max_n <= 7, got " + std::to_string(max_n));
  }
  CounterexampleReport report;
  report.max_n = max_n;
  std::array<bool, 3> wanted = {true, true, true};
  const auto still_wanted = [&] { return wanted[0] || wanted[1] || wanted[2]; };

  for (std::size_t n = 3; n <= max_n && still_wanted(); ++n) {
    const std::uint64_t masks = edge_subset_count(n);
    for (std::uint64_t mask = 0; mask < masks && still_wanted(); ++mask) {
      const auto g = graph_from_edge_mask(n, mask);
      if (!g) continue;
      for (auto& witness : scan_graph(*g, wanted)) {
        if (!confirm_witness(witness)) {
          throw Error(ErrorCode::FormulaMismatch, "witness for " + std::string(to_string(witness.mode)) +
                                                      " not confirmed by the preorder profile");
        }
        wanted[static_cast<std::size_t>(witness.mode)] = false;
        report.witnesses.push_back(std::move(witness));
      }
    }
  }

  for (std::size_t k = 3; k <= 8; ++k) {
    const std::size_t l_brush = k * (k + 1) / 2;
    report.brush.push_back(evaluate_brush(k, 1, l_brush));
    for (std::size_t l = 1; l <= l_brush; ++l) {
      BrushEvaluation eval = evaluate_brush(k, 1, l);
      if (!eval.condition) continue;
      report.brush_scan.push_back(eval);
      break;
    }
  }

  if (wanted[2] && !report.brush_scan.empty()) {
    const BrushEvaluation& first = report.brush_scan.front();
    const CliquePathStar brush = clique_path_star(first.k, first.p, first.l);
    const Centralities c = resistance_centralities(brush.graph);
    CounterexampleWitness witness =
        make_witness(FailureMode::ReverseCostVsWeighted, brush.graph, c, brush.x, brush.y,
                     "clique_path_star(" + std::to_string(first.k) + "," + std::to_string(first.p) + "," +
                         std::to_string(first.l) + ")");
    if (confirm_witness(witness)) {
      wanted[2] = false;
      report.witnesses.push_back(std::move(witness));
    }
  }

  for (FailureMode mode : kAllFailureModes)
    if (wanted[static_cast<std::size_t>(mode)]) report.missing.push_back(mode);
  return report;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ExtremalQuantity q) noexcept {
  switch (q) {
    case ExtremalQuantity::CCMin: return "CC_min";
    case ExtremalQuantity::CCMax: return "CC_max";
    case ExtremalQuantity::RCMin: return "RC_min";
    case ExtremalQuantity::RCMax: return "RC_max";
    case ExtremalQuantity::HMax: return "H_max";
    case ExtremalQuantity::HMin: return "H_min";
  }
  return "?";
}

Rational extremal_formula(std::size_t n, ExtremalQuantity q) {
  const long nn = static_cast<long>(n);
  switch (q) {
    case ExtremalQuantity::CCMin: return 2 * nn * nn - 6 * nn + 5;
    case ExtremalQuantity::CCMax: return make_rational(nn * nn * nn - nn, 3) - (nn * nn) / 4;
    case ExtremalQuantity::RCMin: return nn - 1;
    case ExtremalQuantity::RCMax: return make_rational(nn * (nn - 1) * (4 * nn - 5), 6);
    case ExtremalQuantity::HMax: return (nn - 1) * (nn - 1);
    case ExtremalQuantity::HMin: return 1;
  }
  return 0;
}

namespace {

bool is_path_tree(const Graph& t) { return t.max_degree() <= 2; }
bool is_star_tree(const Graph& t) { return t.max_degree() + 1 == t.order(); }

bool is_path_midpoint(const Graph& t, Vertex r) {
  const auto dist = distances_from(t, r);
  std::uint32_t farthest = 0;
  for (std::uint32_t d : dist) farthest = std::max(farthest, d);
  return farthest == t.order() / 2;  // ceil((n - 1) / 2)
}

}  // namespace

bool in_extremal_family(ExtremalQuantity q, const Graph& tree, Vertex first, std::optional<Vertex> second) {
  const std::size_t n = tree.order();
  switch (q) {
    case ExtremalQuantity::CCMin: return is_star_tree(tree) && tree.degree(first) == 1;
    case ExtremalQuantity::CCMax: return is_path_tree(tree) && is_path_midpoint(tree, first);
    case ExtremalQuantity::RCMin: return is_star_tree(tree) && tree.degree(first) + 1 == n;
    case ExtremalQuantity::RCMax: return is_path_tree(tree) && tree.degree(first) == 1;
    case ExtremalQuantity::HMax:
      return second && is_path_tree(tree) && tree.degree(first) == 1 && tree.degree(*second) == 1;
    case ExtremalQuantity::HMin: return second && tree.degree(first) == 1 && tree.has_edge(first, *second);
  }
  return false;
}

namespace {

struct Tracker {
  ExtremalCertificate cert;
  bool minimise = true;
  bool seen = false;

  void offer(const Rational& value, const Graph& tree, Vertex first, std::optional<Vertex> second) {
    const bool better = !seen || (minimise ? value < cert.value : value > cert.value);
    if (better) {
      seen = true;
      cert.value = value;
      cert.witness = tree;
      cert.first = first;
      cert.second = second;
      cert.optimizers = 1;
      cert.optimizers_in_family = in_extremal_family(cert.quantity, tree, first, second);
    } else if (value == cert.value) {
      ++cert.optimizers;
      if (cert.optimizers_in_family && !in_extremal_family(cert.quantity, tree, first, second)) {
        cert.optimizers_in_family = false;
      }
    }
  }
};

}  // namespace

std::vector<ExtremalCertificate> certify_all_extremal(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "extremal certificates need n >= 2");
  if (n > kMaxExtremalOrder) {
    throw Error(ErrorCode::NTooLarge, "extremal sweep limited to n <= 8, got " + std::to_string(n));
  }
  std::vector<Tracker> trackers;
  for (ExtremalQuantity q : kAllExtremalQuantities) {
    Tracker t;
    t.cert.n = n;
    t.cert.quantity = q;
    t.cert.formula_value = extremal_formula(n, q);
    t.minimise = q == ExtremalQuantity::CCMin || q == ExtremalQuantity::RCMin || q == ExtremalQuantity::HMin;
    trackers.push_back(std::move(t));
  }
  const auto tracker = [&](ExtremalQuantity q) -> Tracker& { return trackers[static_cast<std::size_t>(q)]; };

  std::uint64_t trees = 0;
  for (const Graph& tree : all_labelled_trees(n)) {
    ++trees;
    const HittingMatrix hit = hitting_matrix_linear(tree);
    const CostTable costs = cost_sums(tree, hit);
    for (Vertex r = 0; r < n; ++r) {
      tracker(ExtremalQuantity::CCMin).offer(costs.cc[r], tree, r, std::nullopt);
      tracker(ExtremalQuantity::CCMax).offer(costs.cc[r], tree, r, std::nullopt);
      tracker(ExtremalQuantity::RCMin).offer(costs.rc[r], tree, r, std::nullopt);
      tracker(ExtremalQuantity::RCMax).offer(costs.rc[r], tree, r, std::nullopt);
      for (Vertex y = 0; y < n; ++y) {
        if (y == r) continue;
        tracker(ExtremalQuantity::HMax).offer(hit(r, y), tree, r, y);
        tracker(ExtremalQuantity::HMin).offer(hit(r, y), tree, r, y);
      }
    }
  }
  std::vector<ExtremalCertificate> out;
  for (auto& t : trackers) {
    t.cert.trees_checked = trees;
    out.push_back(std::move(t.cert));
  }
  return out;
}

ExtremalCertificate certify_extremal(std::size_t n, ExtremalQuantity q) {
  return certify_all_extremal(n)[static_cast<std::size_t>(q)];
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return std::uint64_t{words[0]} << 32 | words[1];
}

double kahan_mean(const std::vector<double>& values) {
  double sum = 0.0, comp = 0.0;
  for (double v : values) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<ScalingRow> scaling_experiment(std::span<const std::size_t> sizes, std::size_t samples,
                                           std::uint64_t seed, std::size_t walks_per_tree) {
  if (samples == 0 || walks_per_tree == 0) throw Error(ErrorCode::SizeTooSmall, "samples and walks must be >= 1");
  std::vector<ScalingRow> rows;
  for (std::size_t n : sizes) {
    if (n < 2) throw Error(ErrorCode::SizeTooSmall, "scaling sizes must be >= 2");
    if (n > kMaxScalingOrder) {
      throw Error(ErrorCode::NTooLarge, "scaling sizes limited to 2048, got " + std::to_string(n));
    }
    std::vector<double> cc(samples), rc(samples), ct(samples);
    const double norm = std::pow(static_cast<double>(n), 2.5);
    parallel_for(samples, [&](std::uint64_t i) {
      const RootedTree tree = random_labelled_tree(n, derived_seed(seed, n, 2 * i));
      const TreeCoverCosts costs = tree_cover_costs(tree);
      WalkConfig cfg;
      cfg.seed = derived_seed(seed, n, 2 * i + 1);
      cfg.walks = walks_per_tree;
      const Estimate cover = estimate_cover_time(tree.graph, tree.root, cfg);
      cc[i] = costs.cc.get_d() / norm;
      rc[i] = costs.rc.get_d() / norm;
      ct[i] = static_cast<double>(n) * cover.mean / norm;
    }, 1);
    rows.push_back({n, samples, kahan_mean(cc), kahan_mean(rc), kahan_mean(ct)});
  }
  return rows;
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
  std::string out = "n,samples,cc_norm_mean,rc_norm_mean,ct_norm_mean\n";
  char buffer[160];
  for (const ScalingRow& row : rows) {
    std::snprintf(buffer, sizeof buffer, "%zu,%zu,%.10g,%.10g,%.10g\n", row.n, row.samples, row.cc_norm_mean,
                  row.rc_norm_mean, row.ct_norm_mean);
    out += buffer;
  }
  return out;
}

}  // namespace walkinv
