#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/invariants.hpp"
#include "walkinv/rational.hpp"

namespace walkinv {

/// Expected first-passage times H(from, to) of the simple random walk.
class HittingMatrix {
 public:
  HittingMatrix() = default;
  explicit HittingMatrix(std::size_t n) : n_(n), values_(n * n) {}

  std::size_t order() const noexcept { return n_; }
  const Rational& operator()(Vertex from, Vertex to) const { return values_[from * n_ + to]; }
  Rational& operator()(Vertex from, Vertex to) { return values_[from * n_ + to]; }

  friend bool operator==(const HittingMatrix&, const HittingMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// Hitting times into `target` from every vertex: solves
/// H(x) = 1 + (1/deg x) sum_{z ~ x} H(z) for x != target, H(target) = 0,
/// i.e. the grounded Laplacian system L_target h = deg.
std::vector<Rational> hitting_times_to(const Graph& g, Vertex target);

/// One exact linear solve per target.
HittingMatrix hitting_matrix_linear(const Graph& g);

/// Tetali's resistance formula, summed literally:
/// H(x, y) = 1/2 sum_w deg(w) (r(x,y) + r(w,y) - r(w,x)).
HittingMatrix hitting_matrix_tetali(const Graph& g, const ResistanceMatrix& res);
HittingMatrix hitting_matrix_tetali(const Graph& g);

/// H(x, y) + H(y, x) from the two first-passage solves.
Rational commute(const Graph& g, Vertex x, Vertex y);

/// Expected return time to x: 1 + (1/deg x) sum_{z ~ x} H(z, x).
Rational return_time(const Graph& g, Vertex x);

struct CostTable {
  std::vector<Rational> cc;     // sum_y H(x, y)
  std::vector<Rational> rc;     // sum_y H(y, x)
  std::vector<Rational> cc_pi;  // sum_y deg(y) H(x, y)
  std::vector<Rational> rc_pi;  // sum_y deg(y) H(y, x)
  Rational kemeny;              // common value of cc_pi
};

/// Direct sums over the hitting matrix.
CostTable cost_sums(const Graph& g, const HittingMatrix& hit);

/// The four resistance closed forms:
///   CC    = m R - (n/2) R_pi + K_pi
///   RC    = m R + (n/2) R_pi - K_pi
///   RC_pi = 2m R_pi - K_pi2
///   CC_pi = K_pi2
CostTable cost_formulas(const Graph& g, const VertexInvariants& vinv, const GlobalInvariants& ginv);

/// Computes both routes and throws FormulaMismatch unless they agree exactly
/// and CC_pi is constant.
CostTable cost_table(const Graph& g, const HittingMatrix& hit, const VertexInvariants& vinv,
                     const GlobalInvariants& ginv);
CostTable cost_table(const Graph& g);

/// (lhs, rhs) of sum_{z ~ x} (CC(x) - CC(z)) = n deg(x) - 2m.
std::pair<Rational, Rational> zw_identity_check(const Graph& g, const CostTable& costs, Vertex x);
std::pair<Rational, Rational> zw_identity_check(const Graph& g, Vertex x);

struct HittingBoundsCheck {
  Rational hitting;
  std::uint32_t distance = 0;
  bool lower_holds = false;  // d^2 <= H
  bool upper_holds = false;  // H <= d (2m - d)
  bool lower_tight = false;
  bool upper_tight = false;
};

/// Two-sided tree bound on H(x, y); tightness is decided from H itself and
/// from the path characterisation (every w lies on the x-y path, or y
/// (resp. x) separates w from x (resp. y)). Throws FormulaMismatch if the two
/// disagree, NotATree for non-trees.
HittingBoundsCheck tree_hitting_bounds_check(const Graph& tree, const HittingMatrix& hit, const DistanceMatrix& dist,
                                             Vertex x, Vertex y);
HittingBoundsCheck tree_hitting_bounds_check(const Graph& tree, Vertex x, Vertex y);

/// Wiener index via edge cuts, sum_e |A(e)| |B(e)|, in linear time.
std::uint64_t tree_wiener_index(const Graph& tree);

/// Closed forms for trees: CC(r) = 2W - D(r) and RC(r) = (2n-1) D(r) - 2W.
struct TreeCoverCosts {
  Integer cc;
  Integer rc;
};
TreeCoverCosts tree_cover_costs(const RootedTree& tree);

/// Everything the exact engine derives for one graph.
struct GraphAnalysis {
  DistanceMatrix dist;
  ResistanceMatrix res;
  VertexInvariants vinv;
  GlobalInvariants ginv;
  HittingMatrix hit;
  CostTable costs;
};

GraphAnalysis analyze(const Graph& g);

}  // namespace walkinv
