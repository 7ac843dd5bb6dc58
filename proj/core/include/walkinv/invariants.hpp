#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/rational.hpp"

namespace walkinv {

/// Effective resistances r(x, y) with unit-resistor edges, plus the number of
/// spanning trees that serves as their common denominator.
class ResistanceMatrix {
 public:
  ResistanceMatrix(std::size_t n, Integer spanning_trees)
      : n_(n), values_(n * n), spanning_trees_(std::move(spanning_trees)) {}

  std::size_t order() const noexcept { return n_; }
  const Rational& operator()(Vertex x, Vertex y) const { return values_[x * n_ + y]; }
  Rational& operator()(Vertex x, Vertex y) { return values_[x * n_ + y]; }
  const Integer& spanning_trees() const noexcept { return spanning_trees_; }

 private:
  std::size_t n_;
  std::vector<Rational> values_;
  Integer spanning_trees_;
};

/// tau(G) = det L_v (Matrix-Tree theorem), evaluated at v = 0.
Integer spanning_tree_count(const Graph& g);

/// r(v, w) = det L_{vw} / tau(G), tau computed once.
ResistanceMatrix resistance_matrix(const Graph& g);

/// r(source, .) as the diagonal of the inverse of the grounded Laplacian
/// L_source. One elimination instead of n - 1 determinants.
std::vector<Rational> resistances_from(const Graph& g, Vertex source);

struct VertexInvariants {
  std::vector<Rational> D;     // sum_w d(v, w)
  std::vector<Rational> D_pi;  // sum_w deg(w) d(v, w)
  std::vector<Rational> R;     // sum_w r(v, w)
  std::vector<Rational> R_pi;  // sum_w deg(w) r(v, w)
};

struct GlobalInvariants {
  std::size_t n = 0;
  std::size_t m = 0;
  Integer tau;
  Rational W;        // Wiener index
  Rational K;        // Kirchhoff index
  Rational K_pi;     // 1/2 sum_x sum_y deg(y) r(x, y)
  Rational K_pi2;    // 1/2 sum_x sum_y deg(x) deg(y) r(x, y)
  Rational schultz;  // sum over pairs (deg x + deg y) d(x, y)
  Rational gutman;   // sum over pairs deg x deg y d(x, y)
};

VertexInvariants vertex_invariants(const Graph& g, const DistanceMatrix& dist, const ResistanceMatrix& res);
VertexInvariants vertex_invariants(const Graph& g);

GlobalInvariants global_invariants(const Graph& g, const DistanceMatrix& dist, const ResistanceMatrix& res);
GlobalInvariants global_invariants(const Graph& g);

/// Each flag asserts one exact tree identity.
struct TreeIdentityReport {
  bool resistance_is_distance = false;       // r = d entrywise
  bool weighted_centrality_formula = false;  // D_pi(x) = 2 D(x) - m for all x
  bool schultz_formula = false;              // Sch = 4W - n(n-1)
  bool gutman_formula = false;               // Gut = 4W - (n-1)(2n-1)
  bool kirchhoff_is_wiener = false;          // K = W
  bool k_pi_is_half_schultz = false;         // K_pi = Sch / 2
  bool k_pi2_is_gutman = false;              // K_pi2 = Gut

  bool all() const noexcept {
    return resistance_is_distance && weighted_centrality_formula && schultz_formula && gutman_formula &&
           kirchhoff_is_wiener && k_pi_is_half_schultz && k_pi2_is_gutman;
  }
};

/// Throws NotATree.
TreeIdentityReport tree_identities_report(const Graph& tree);
TreeIdentityReport tree_identities_report(const Graph& tree, const DistanceMatrix& dist, const ResistanceMatrix& res,
                                          const VertexInvariants& vinv, const GlobalInvariants& ginv);

/// (|A_x(e)|, |B_x(e)|): vertices on x's side of e and the rest.
/// Throws NotATree or NotAnEdge.
std::pair<std::size_t, std::size_t> branch_sizes(const Graph& tree, Vertex x, Edge e);

}  // namespace walkinv
