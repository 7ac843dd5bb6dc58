#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/rational.hpp"
#include "walkinv/walk_costs.hpp"

namespace walkinv {

// ---------------------------------------------------------------------------
// Vertex preorders

/// The six vertex orderings compared on trees. With D, D_pi generalised to
/// R, R_pi (identical on trees), each ordering says when x precedes-or-ties y:
///   Centrality           R(x) <= R(y)
///   WeightedCentrality   R_pi(x) <= R_pi(y)
///   Hitting              H(y, x) <= H(x, y)
///   WeightedReverseCost  RC_pi(x) <= RC_pi(y)
///   ReverseCost          RC(x) <= RC(y)
///   CoverCost            CC(x) >= CC(y)
enum class Ordering : std::size_t {
  Centrality,
  WeightedCentrality,
  Hitting,
  WeightedReverseCost,
  ReverseCost,
  CoverCost,
};
inline constexpr std::size_t kOrderingCount = 6;
inline constexpr std::array<Ordering, kOrderingCount> kAllOrderings = {
    Ordering::Centrality,          Ordering::WeightedCentrality, Ordering::Hitting,
    Ordering::WeightedReverseCost, Ordering::ReverseCost,        Ordering::CoverCost};

/// Roman numeral label "i".."vi".
std::string_view to_string(Ordering o) noexcept;

struct PreorderProfile {
  std::vector<Rational> centrality;
  std::vector<Rational> weighted_centrality;
  HittingMatrix hitting;
  std::vector<Rational> weighted_reverse_cost;
  std::vector<Rational> reverse_cost;
  std::vector<Rational> cover_cost;

  std::size_t order() const noexcept { return centrality.size(); }
  bool precedes(Ordering o, Vertex x, Vertex y) const;
};

PreorderProfile preorder_profile(const GraphAnalysis& analysis);
PreorderProfile preorder_profile(const Graph& g);

using EquivalenceMatrix = std::array<std::array<bool, kOrderingCount>, kOrderingCount>;

/// True iff a and b give the same outcome on every ordered vertex pair,
/// ties included.
bool orderings_agree(const PreorderProfile& profile, Ordering a, Ordering b);

EquivalenceMatrix preorder_equivalences(const PreorderProfile& profile);
EquivalenceMatrix preorder_equivalences(const Graph& g);

/// Reflexive, total and transitive over all vertex triples.
bool is_total_preorder(const PreorderProfile& profile, Ordering o);

// ---------------------------------------------------------------------------
// Counterexamples on non-trees

enum class FailureMode {
  RegularNonConstantR,    // regular graph, R not constant: (vi) differs from (i)
  EqualRUnequalRPi,       // R(x) = R(y), R_pi(x) != R_pi(y): (i) differs from (ii)
  ReverseCostVsWeighted,  // R(x)-R(y) > R_pi(y)-R_pi(x) > 0: (v) differs from (iv)
};
inline constexpr std::array<FailureMode, 3> kAllFailureModes = {
    FailureMode::RegularNonConstantR, FailureMode::EqualRUnequalRPi, FailureMode::ReverseCostVsWeighted};

std::string_view to_string(FailureMode mode) noexcept;

struct CounterexampleWitness {
  FailureMode mode;
  Graph graph;
  Vertex x;
  Vertex y;
  Rational R_x, R_y, R_pi_x, R_pi_y;
  Ordering first;
  Ordering second;
  std::string source;
};

/// R(x) - R(y) and R_pi(y) - R_pi(x) for clique_path_star(k, p, l).
struct BrushEvaluation {
  std::size_t k = 0, p = 0, l = 0;
  Rational delta_R;
  Rational delta_R_pi;
  bool condition = false;  // delta_R > delta_R_pi > 0
};

BrushEvaluation evaluate_brush(std::size_t k, std::size_t p, std::size_t l);

struct CounterexampleReport {
  std::size_t max_n = 0;
  std::vector<CounterexampleWitness> witnesses;  // at most one per mode
  std::vector<FailureMode> missing;
  std::vector<BrushEvaluation> brush;       // k = 3..8, p = 1, l = k(k+1)/2
  std::vector<BrushEvaluation> brush_scan;  // per k, the first l in 1..k(k+1)/2 meeting the condition

  bool complete() const noexcept { return missing.empty(); }
};

/// Exhaustive search over connected graphs 3 <= n <= max_n <= 7, then the
/// clique_path_star family for any mode still missing. Every witness is
/// confirmed against the preorder profile before it is reported.
CounterexampleReport find_counterexamples(std::size_t max_n);

/// True when the two orderings named in the witness disagree on (x, y).
bool confirm_witness(const CounterexampleWitness& witness);

// ---------------------------------------------------------------------------
// Extremal trees

enum class ExtremalQuantity { CCMin, CCMax, RCMin, RCMax, HMax, HMin };
inline constexpr std::array<ExtremalQuantity, 6> kAllExtremalQuantities = {
    ExtremalQuantity::CCMin, ExtremalQuantity::CCMax, ExtremalQuantity::RCMin,
    ExtremalQuantity::RCMax, ExtremalQuantity::HMax,  ExtremalQuantity::HMin};
inline constexpr std::size_t kMaxExtremalOrder = 8;

std::string_view to_string(ExtremalQuantity q) noexcept;

/// Closed-form optimum over trees of order n:
///   CC_min 2n^2 - 6n + 5, CC_max (n^3 - n)/3 - floor(n^2/4),
///   RC_min n - 1, RC_max n(n-1)(4n-5)/6, H_max m^2, H_min 1.
Rational extremal_formula(std::size_t n, ExtremalQuantity q);

/// Whether (tree, first[, second]) belongs to the family claimed optimal:
/// star at a leaf, path at a midpoint, star at its centre, path at an end,
/// path endpoints, leaf and its neighbour.
bool in_extremal_family(ExtremalQuantity q, const Graph& tree, Vertex first, std::optional<Vertex> second);

struct ExtremalCertificate {
  std::size_t n = 0;
  ExtremalQuantity quantity = ExtremalQuantity::CCMin;
  Rational value;
  Rational formula_value;
  std::optional<Graph> witness;
  Vertex first = 0;                // root, or x for hitting times
  std::optional<Vertex> second;    // y for hitting times
  std::uint64_t trees_checked = 0;
  std::uint64_t optimizers = 0;    // (tree, root) or (tree, x, y) attaining value
  bool optimizers_in_family = false;

  bool valid() const { return witness.has_value() && value == formula_value && optimizers_in_family; }
};

/// Exhaustive over every labelled tree and every root (or ordered pair),
/// using the linear-solve hitting times. 2 <= n <= 8, else NTooLarge.
ExtremalCertificate certify_extremal(std::size_t n, ExtremalQuantity q);

/// All six certificates from a single sweep.
std::vector<ExtremalCertificate> certify_all_extremal(std::size_t n);

// ---------------------------------------------------------------------------
// Random-tree scaling

inline constexpr std::size_t kMaxScalingOrder = 2048;

struct ScalingRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  double cc_norm_mean = 0.0;  // mean CC(r) / n^(5/2)
  double rc_norm_mean = 0.0;  // mean RC(r) / n^(5/2)
  double ct_norm_mean = 0.0;  // mean n * CT(r) / n^(5/2), CT estimated by simulation
};

/// Uniform random rooted labelled trees; CC and RC exact via the tree
/// closed forms, CT from walks_per_tree simulated walks per sample.
std::vector<ScalingRow> scaling_experiment(std::span<const std::size_t> sizes, std::size_t samples,
                                           std::uint64_t seed, std::size_t walks_per_tree = 1);

/// Header "n,samples,cc_norm_mean,rc_norm_mean,ct_norm_mean" then one row per size.
std::string scaling_csv(std::span<const ScalingRow> rows);

}  // namespace walkinv
