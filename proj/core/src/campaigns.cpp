#include "walkinv/campaigns.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "walkinv/error.hpp"
#include "walkinv/graph.hpp"
#include "walkinv/invariants.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/parallel.hpp"
#include "walkinv/report.hpp"
#include "walkinv/simulate.hpp"
#include "walkinv/spectral.hpp"
#include "walkinv/verify.hpp"
#include "walkinv/walk_costs.hpp"

namespace walkinv {

namespace {

/// Per-instance tally, merged in index order so reports do not depend on
/// thread scheduling.
struct Tally {
  bool counted = false;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

void merge(CampaignResult& result, std::vector<Tally>& tallies) {
  for (Tally& t : tallies) {
    if (t.counted) ++result.graphs;
    result.checks += t.checks;
    result.failures += t.failures.size();
    for (std::string& f : t.failures) {
      if (result.failure_samples.size() >= kMaxFailureSamples) break;
      result.failure_samples.push_back(std::move(f));
    }
  }
}

/// Runs body over [0, count); an Error thrown for one instance is recorded
/// as a failure of that instance.
void sweep(CampaignResult& result, std::uint64_t count, const std::string& label,
           const std::function<void(std::uint64_t, Tally&)>& body) {
  std::vector<Tally> tallies(count);
  parallel_for(count, [&](std::uint64_t i) {
    Tally& t = tallies[i];
    try {
      body(i, t);
    } catch (const Error& e) {
      t.failures.push_back(label + " #" + std::to_string(i) + ": " + e.what());
    }
  });
  merge(result, tallies);
}

std::string where(const std::string& label, std::uint64_t index) { return label + " #" + std::to_string(index); }

std::string where(const std::string& label, std::uint64_t index, Vertex x) {
  return where(label, index) + " v=" + std::to_string(x);
}

std::string where(const std::string& label, std::uint64_t index, Vertex x, Vertex y) {
  return where(label, index) + " (" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void require_range(std::size_t max_n, std::size_t lo, std::size_t hi, const char* what) {
  if (max_n < lo) throw Error(ErrorCode::SizeTooSmall, std::string(what) + ": max_n must be >= " + std::to_string(lo));
  if (max_n > hi) {
    throw Error(ErrorCode::NTooLarge,
                std::string(what) + ": max_n must be <= " + std::to_string(hi) + ", got " + std::to_string(max_n));
  }
}

void check_tree(const Graph& tree, const std::string& label, std::uint64_t index, Tally& t) {
  t.counted = true;
  const GraphAnalysis a = analyze(tree);  // throws FormulaMismatch if cost formulas disagree
  const std::size_t n = tree.order();
  const auto nn = static_cast<long>(n);
  const auto m = static_cast<long>(tree.size());
  const Rational& W = a.ginv.W;
  const TreeIdentityReport ids = tree_identities_report(tree, a.dist, a.res, a.vinv, a.ginv);
  const std::string at = where(label, index);

  t.expect(ids.resistance_is_distance, at + ": r = d");
  t.expect(ids.weighted_centrality_formula, at + ": D_pi = 2D - m");
  t.expect(ids.schultz_formula, at + ": Sch = 4W - n(n-1)");
  t.expect(ids.gutman_formula, at + ": Gut = 4W - (n-1)(2n-1)");
  t.expect(ids.kirchhoff_is_wiener, at + ": K = W");
  t.expect(ids.k_pi_is_half_schultz, at + ": K_pi = Sch/2");
  t.expect(ids.k_pi2_is_gutman, at + ": K_pi2 = Gut");
  t.expect(W == static_cast<unsigned long>(tree_wiener_index(tree)), at + ": edge-cut Wiener index");

  for (Vertex x = 0; x < n; ++x) {
    const Rational& D = a.vinv.D[x];
    const Rational& CC = a.costs.cc[x];
    const Rational& RC = a.costs.rc[x];
    const std::string v = where(label, index, x);
    t.expect(CC + D == 2 * W, v + ": CC + D = 2W");
    t.expect(RC + (2 * nn - 1) * CC == 4 * (nn - 1) * W, v + ": RC + (2n-1)CC = 4(n-1)W");
    t.expect(RC == (2 * nn - 1) * D - 2 * W, v + ": RC = (2n-1)D - 2W");
    t.expect(a.costs.rc_pi[x] == 4 * m * D + m - 4 * W, v + ": RC_pi = 4mD + m - 4W");
    t.expect(a.vinv.R[x] == D && a.vinv.R_pi[x] == a.vinv.D_pi[x], v + ": R = D, R_pi = D_pi");

    const TreeCoverCosts closed = tree_cover_costs(RootedTree(tree, x));
    t.expect(Rational(closed.cc) == CC && Rational(closed.rc) == RC, v + ": tree cover-cost closed forms");

    Rational edge_sum = 0;
    for (const Edge& e : tree.edges()) edge_sum += static_cast<unsigned long>(branch_sizes(tree, x, e).second);
    t.expect(edge_sum == D, v + ": D = sum_e |B_x(e)|");

    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rational expected = m * static_cast<long>(a.dist(x, y)) + a.vinv.D[y] - D;
      t.expect(a.hit(x, y) == expected, where(label, index, x, y) + ": H = m d + D(y) - D(x)");
    }
  }
}

}  // namespace

CampaignResult tree_identity_campaign(std::size_t max_n) {
  require_range(max_n, 2, kMaxTreeEnumerationOrder, "tree campaign");
  CampaignResult result;
  result.name = "trees";
  result.max_n = max_n;
  nlohmann::json per_n = nlohmann::json::object();
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::uint64_t count = labelled_tree_count(n);
    const std::string label = "tree n=" + std::to_string(n);
    sweep(result, count, label,
          [&](std::uint64_t i, Tally& t) { check_tree(labelled_tree(n, i), label, i, t); });
    per_n[std::to_string(n)] = count;
  }
  result.details["trees_per_n"] = per_n;
  return result;
}

CampaignResult general_graph_campaign(std::size_t max_n) {
  require_range(max_n, 2, kMaxGraphEnumerationOrder, "graph campaign");
  CampaignResult result;
  result.name = "graphs";
  result.max_n = max_n;
  nlohmann::json per_n = nlohmann::json::object();
  std::uint64_t regular_graphs = 0;

  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::uint64_t masks = edge_subset_count(n);
    const std::string label = "graph n=" + std::to_string(n);
    std::vector<char> regular(masks, 0);
    const std::uint64_t before = result.graphs;
    sweep(result, masks, label, [&](std::uint64_t mask, Tally& t) {
      const auto maybe = graph_from_edge_mask(n, mask);
      if (!maybe) return;
      const Graph& g = *maybe;
      t.counted = true;
      regular[mask] = g.is_regular();
      const GraphAnalysis a = analyze(g);  // cost formulas cross-checked inside
      const auto m = static_cast<unsigned long>(g.size());
      const std::string at = where(label, mask);

      t.expect(hitting_matrix_tetali(g, a.res) == a.hit, at + ": Tetali = linear solve");
      t.expect(a.costs.kemeny == a.ginv.K_pi2, at + ": Kemeny = K_pi2");
      t.expect(a.ginv.K <= a.ginv.W, at + ": K <= W");

      bool cc_constant = true;
      for (Vertex x = 0; x < n; ++x) {
        const std::string v = where(label, mask, x);
        t.expect(a.costs.cc_pi[x] == a.costs.kemeny, v + ": CC_pi constant");
        if (a.costs.cc[x] != a.costs.cc[0]) cc_constant = false;

        const auto [lhs, rhs] = zw_identity_check(g, a.costs, x);
        t.expect(lhs == rhs, v + ": sum_z (CC(x) - CC(z)) = n d(x) - 2m");

        Rational back = 0;
        for (Vertex z : g.neighbors(x)) back += a.hit(z, x);
        const auto d = static_cast<unsigned long>(g.degree(x));
        t.expect(1 + back / d == make_rational(static_cast<long>(2 * m), static_cast<long>(d)), v + ": return time = 2m/d");

        for (Vertex y = 0; y < n; ++y) {
          if (x == y) continue;
          const std::string p = where(label, mask, x, y);
          t.expect(a.hit(x, y) + a.hit(y, x) == 2 * m * a.res(x, y), p + ": commute = 2m r");
          t.expect(a.hit(x, y) >= 1, p + ": H >= 1");
          t.expect(a.res(x, y) > 0 && a.res(x, y) <= a.dist(x, y), p + ": 0 < r <= d");
          bool triangle = true;
          for (Vertex w = 0; w < n; ++w)
            if (a.res(x, y) > a.res(x, w) + a.res(w, y)) triangle = false;
          t.expect(triangle, p + ": resistance triangle inequality");
        }
      }
      t.expect(cc_constant == g.is_regular(), at + ": CC constant iff regular");
      if (g.is_regular()) {
        const auto k = static_cast<unsigned long>(g.degree(0));
        const Rational& cc = a.costs.cc[0];
        t.expect(a.costs.kemeny == k * cc && k * cc == k * a.ginv.K_pi && a.ginv.K_pi == k * a.ginv.K,
                 at + ": regular CC_pi = k CC = k K_pi = k^2 K");
      }
    });
    per_n[std::to_string(n)] = result.graphs - before;
    regular_graphs += static_cast<std::uint64_t>(std::count(regular.begin(), regular.end(), 1));
  }
  result.details["graphs_per_n"] = per_n;
  result.details["regular_graphs"] = regular_graphs;
  return result;
}

CampaignResult spectral_campaign(std::size_t max_n, std::size_t random_count, std::size_t random_max_n,
                                 std::uint64_t seed) {
  require_range(max_n, 2, kMaxGraphEnumerationOrder, "spectral campaign");
  if (random_count > 0) require_range(random_max_n, 3, 40, "spectral campaign random sizes");
  CampaignResult result;
  result.name = "spectral";
  result.max_n = max_n;

  const auto check = [](const Graph& g, const std::string& at, Tally& t) {
    t.counted = true;
    const DistanceMatrix dist = distances(g);
    const ResistanceMatrix res = resistance_matrix(g);
    const VertexInvariants vinv = vertex_invariants(g, dist, res);
    const GlobalInvariants ginv = global_invariants(g, dist, res);
    const SpectralSums sums = spectral_sums(g);
    const SpectralIdentityCheck ids = check_spectral_identities(g, sums, vinv, ginv);
    t.expect(ids.kirchhoff, at + ": K = n sum 1/mu");
    t.expect(ids.kemeny_pi2, at + ": K_pi2 = 2m sum 1/lambda(N)");
    t.expect(ids.resistance_centrality, at + ": R(v) = sum 1/lambda(L_v)");
    t.expect(ids.weighted_resistance_centrality, at + ": R_pi(v) = sum 1/lambda(N_v)");
    t.expect(ids.laplacian_rank, at + ": 0 is a simple Laplacian eigenvalue");

    const PuvRelations rel = puv_relations(g, bivariate_det(g), ginv);
    t.expect(rel.u.holds(), at + ": [u]P");
    t.expect(rel.v.holds(), at + ": [v]P");
    t.expect(rel.uu.holds(), at + ": [u^2]P");
    t.expect(rel.uv.holds(), at + ": [uv]P");
    t.expect(rel.vv.holds(), at + ": [v^2]P");
    t.expect(rel.origin_vanishes, at + ": P(0,0) = 0");
    t.expect(rel.u_slice_is_charpoly_L, at + ": P(u,0) = charpoly L");
    t.expect(rel.v_slice_is_multiple_of_N, at + ": P(0,v) multiple of charpoly N");

    const CostTable costs = cost_sums(g, hitting_matrix_linear(g));
    const auto two_m = static_cast<unsigned long>(2 * g.size());
    t.expect(costs.kemeny == two_m * sums.sum_inv_nonzero_N && costs.kemeny == ginv.K_pi2,
             at + ": Kemeny = 2m sum 1/lambda(N) = K_pi2");
  };

  nlohmann::json per_n = nlohmann::json::object();
  for (std::size_t n = 2; n <= max_n; ++n) {
    const std::uint64_t before = result.graphs;
    const std::string label = "graph n=" + std::to_string(n);
    sweep(result, edge_subset_count(n), label, [&](std::uint64_t mask, Tally& t) {
      if (const auto g = graph_from_edge_mask(n, mask)) check(*g, where(label, mask), t);
    });
    per_n[std::to_string(n)] = result.graphs - before;
  }

  // Sizes and densities are drawn up front so instance i is fixed by (seed, i).
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(3, std::max<std::size_t>(3, random_max_n));
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::vector<std::tuple<std::size_t, double, std::uint64_t>> plan;
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = size(rng);
    const double p = density(rng);
    plan.emplace_back(n, p, rng());
  }
  sweep(result, random_count, "random", [&](std::uint64_t i, Tally& t) {
    const auto& [n, p, s] = plan[i];
    check(random_connected_graph(n, p, s), "random #" + std::to_string(i) + " n=" + std::to_string(n), t);
  });

  result.details["graphs_per_n"] = per_n;
  result.details["random_graphs"] = random_count;
  result.details["random_max_n"] = random_max_n;
  result.details["seed"] = seed;
  return result;
}

CampaignResult extremal_campaign(std::size_t max_n) {
  require_range(max_n, 2, kMaxExtremalOrder, "extremal campaign");
  CampaignResult result;
  result.name = "extremal";
  result.max_n = max_n;
  nlohmann::json certificates = nlohmann::json::array();

  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const ExtremalCertificate& cert : certify_all_extremal(n)) {
      ++result.checks;
      if (!cert.valid()) {
        ++result.failures;
        if (result.failure_samples.size() < kMaxFailureSamples) {
          result.failure_samples.push_back("n=" + std::to_string(n) + " " + std::string(to_string(cert.quantity)) +
                                           ": value " + to_string(cert.value) + ", formula " +
                                           to_string(cert.formula_value) +
                                           (cert.optimizers_in_family ? "" : ", optimizer outside family"));
        }
      }
      certificates.push_back(cert);
    }

    const std::string label = "tree n=" + std::to_string(n);
    const auto m = static_cast<long>(n - 1);
    sweep(result, labelled_tree_count(n), label, [&](std::uint64_t i, Tally& t) {
      const Graph tree = labelled_tree(n, i);
      t.counted = true;
      const HittingMatrix hit = hitting_matrix_linear(tree);
      const DistanceMatrix dist = distances(tree);
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          if (x == y) continue;
          const std::string p = where(label, i, x, y);
          // Throws FormulaMismatch when H-tightness and path geometry disagree.
          const HittingBoundsCheck b = tree_hitting_bounds_check(tree, hit, dist, x, y);
          t.expect(b.lower_holds && b.upper_holds, p + ": d^2 <= H <= d(2m - d)");
          const Rational& h = hit(x, y);
          t.expect(h >= 1 && h <= m * m, p + ": 1 <= H <= m^2");
          const bool leaf_to_neighbour = tree.degree(x) == 1 && tree.has_edge(x, y);
          t.expect((h == 1) == leaf_to_neighbour, p + ": H = 1 iff leaf to its neighbour");
          const bool path_ends = tree.max_degree() <= 2 && dist(x, y) == m;
          t.expect((h == m * m) == path_ends, p + ": H = m^2 iff path endpoints");
        }
      }
    });
  }
  result.details["certificates"] = certificates;
  return result;
}

CampaignResult preorder_campaign(std::size_t tree_max_n, std::size_t graph_max_n) {
  if (tree_max_n > 0) require_range(tree_max_n, 2, kMaxTreeEnumerationOrder, "preorder campaign (trees)");
  if (graph_max_n > 0) require_range(graph_max_n, 2, kMaxGraphEnumerationOrder, "preorder campaign (graphs)");
  CampaignResult result;
  result.name = "preorders";
  result.max_n = std::max(tree_max_n, graph_max_n);

  for (std::size_t n = 2; n <= tree_max_n; ++n) {
    const std::string label = "tree n=" + std::to_string(n);
    sweep(result, labelled_tree_count(n), label, [&](std::uint64_t i, Tally& t) {
      t.counted = true;
      const PreorderProfile profile = preorder_profile(labelled_tree(n, i));
      const EquivalenceMatrix eq = preorder_equivalences(profile);
      for (std::size_t a = 0; a < kOrderingCount; ++a) {
        t.expect(is_total_preorder(profile, kAllOrderings[a]),
                 where(label, i) + ": (" + std::string(to_string(kAllOrderings[a])) + ") total preorder");
        for (std::size_t b = a + 1; b < kOrderingCount; ++b) {
          t.expect(eq[a][b], where(label, i) + ": (" + std::string(to_string(kAllOrderings[a])) + ") = (" +
                                 std::string(to_string(kAllOrderings[b])) + ")");
        }
      }
    });
  }

  // How often each pair of orderings disagrees on general graphs; only the
  // (ii)/(iii)/(iv) block is asserted.
  std::array<std::array<std::uint64_t, kOrderingCount>, kOrderingCount> disagreements{};
  std::uint64_t graphs_before = result.graphs;
  for (std::size_t n = 2; n <= graph_max_n; ++n) {
    const std::string label = "graph n=" + std::to_string(n);
    const std::uint64_t masks = edge_subset_count(n);
    std::vector<EquivalenceMatrix> matrices(masks);
    std::vector<char> present(masks, 0);
    sweep(result, masks, label, [&](std::uint64_t mask, Tally& t) {
      const auto g = graph_from_edge_mask(n, mask);
      if (!g) return;
      t.counted = true;
      present[mask] = 1;
      const PreorderProfile profile = preorder_profile(*g);
      matrices[mask] = preorder_equivalences(profile);
      const auto& eq = matrices[mask];
      const auto idx = [](Ordering o) { return static_cast<std::size_t>(o); };
      const std::string at = where(label, mask);
      t.expect(eq[idx(Ordering::WeightedCentrality)][idx(Ordering::Hitting)], at + ": (ii) = (iii)");
      t.expect(eq[idx(Ordering::Hitting)][idx(Ordering::WeightedReverseCost)], at + ": (iii) = (iv)");
      t.expect(is_total_preorder(profile, Ordering::Hitting), at + ": (iii) total preorder");
    });
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (!present[mask]) continue;
      for (std::size_t a = 0; a < kOrderingCount; ++a)
        for (std::size_t b = 0; b < kOrderingCount; ++b)
          if (!matrices[mask][a][b]) ++disagreements[a][b];
    }
  }
  if (graph_max_n > 0) {
    nlohmann::json table = nlohmann::json::object();
    for (std::size_t a = 0; a < kOrderingCount; ++a)
      for (std::size_t b = a + 1; b < kOrderingCount; ++b)
        table[std::string(to_string(kAllOrderings[a])) + "-" + std::string(to_string(kAllOrderings[b]))] =
            disagreements[a][b];
    result.details["graph_disagreements"] = table;
    result.details["graphs_checked"] = result.graphs - graphs_before;
  }
  result.details["tree_max_n"] = tree_max_n;
  result.details["graph_max_n"] = graph_max_n;
  return result;
}

CampaignResult counterexample_campaign(std::size_t max_n, bool allow_inconclusive) {
  require_range(max_n, 3, kMaxGraphEnumerationOrder, "counterexample campaign");
  CampaignResult result;
  result.name = "counterexamples";
  result.max_n = max_n;
  const CounterexampleReport report = find_counterexamples(max_n);
  for (const CounterexampleWitness& w : report.witnesses) {
    ++result.checks;
    if (!confirm_witness(w)) {
      ++result.failures;
      result.failure_samples.push_back(std::string(to_string(w.mode)) + ": witness not confirmed");
    }
  }
  nlohmann::json missing = nlohmann::json::array();
  for (FailureMode mode : report.missing) {
    missing.push_back(std::string(to_string(mode)));
    ++result.checks;
    if (allow_inconclusive) {
      result.inconclusive = true;
    } else {
      ++result.failures;
      result.failure_samples.push_back(std::string(to_string(mode)) + ": no witness found");
    }
  }
  result.graphs = report.witnesses.size();
  result.details["witnesses"] = report.witnesses;
  result.details["missing"] = missing;
  result.details["brush"] = report.brush;
  result.details["brush_scan"] = report.brush_scan;
  return result;
}

CampaignResult monte_carlo_campaign(const MonteCarloSettings& s) {
  require_range(s.hitting_max_n, 3, 64, "monte carlo hitting sizes");
  require_range(s.cover_max_n, 3, kMaxExactCoverOrder, "monte carlo cover sizes");
  CampaignResult result;
  result.name = "montecarlo";
  result.max_n = std::max(s.hitting_max_n, s.cover_max_n);

  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<std::size_t> hit_size(3, s.hitting_max_n);
  std::uniform_real_distribution<double> density(0.0, 0.5);

  nlohmann::json hitting = nlohmann::json::array();
  std::size_t within = 0;
  for (std::size_t i = 0; i < s.hitting_cases; ++i) {
    const std::size_t n = hit_size(rng);
    const Graph g = random_connected_graph(n, density(rng), rng());
    std::uniform_int_distribution<Vertex> vertex(0, n - 1);
    const Vertex x = vertex(rng);
    Vertex y = vertex(rng);
    while (y == x) y = vertex(rng);
    const Rational exact_h = hitting_times_to(g, y)[x];
    const Estimate est = estimate_hitting(g, x, y, WalkConfig{rng(), s.walks, 0});
    const double err = std::abs(est.mean - exact_h.get_d());
    const bool ok = err <= s.hitting_sigmas * est.std_error + 1e-9;
    within += ok;
    hitting.push_back({{"n", n}, {"m", g.size()}, {"x", x}, {"y", y}, {"exact", exact(exact_h)},
                       {"estimate", est}, {"within", ok}});
  }
  ++result.checks;
  const double fraction = s.hitting_cases ? static_cast<double>(within) / static_cast<double>(s.hitting_cases) : 1.0;
  if (fraction < s.hitting_pass_fraction) {
    ++result.failures;
    result.failure_samples.push_back("hitting estimates within tolerance: " + std::to_string(within) + " of " +
                                     std::to_string(s.hitting_cases));
  }
  result.graphs += s.hitting_cases;

  std::vector<std::pair<std::string, Graph>> cover_cases = {
      {"K2", complete(2)}, {"path(3)", path(3)}, {"star(4)", star(4)}, {"cycle(5)", cycle(5)},
      {"complete(5)", complete(5)}};
  for (std::size_t n = 6; n <= s.cover_max_n; ++n) {
    cover_cases.emplace_back("random n=" + std::to_string(n), random_connected_graph(n, 0.3, rng()));
  }
  nlohmann::json cover = nlohmann::json::array();
  for (const auto& [name, g] : cover_cases) {
    const Rational exact_ct = exact_cover_time_small(g, 0);
    const Estimate est = estimate_cover_time(g, 0, WalkConfig{rng(), s.walks, 0});
    const double err = std::abs(est.mean - exact_ct.get_d());
    const bool ok = err <= s.cover_sigmas * est.std_error + 1e-9;
    ++result.checks;
    ++result.graphs;
    if (!ok) {
      ++result.failures;
      result.failure_samples.push_back("cover time " + name + ": estimate " + std::to_string(est.mean) + " vs exact " +
                                       to_string(exact_ct));
    }
    cover.push_back({{"graph", name}, {"n", g.order()}, {"exact", exact(exact_ct)}, {"estimate", est}, {"within", ok}});
  }

  result.details["hitting"] = hitting;
  result.details["hitting_within"] = within;
  result.details["hitting_fraction"] = fraction;
  result.details["cover"] = cover;
  result.details["walks"] = s.walks;
  result.details["seed"] = s.seed;
  return result;
}

}  // namespace walkinv
