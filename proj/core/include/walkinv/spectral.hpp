#pragma once

#include <cstddef>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/invariants.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/rational.hpp"

namespace walkinv {

/// Index of the lowest nonvanishing coefficient (the multiplicity of 0 as a
/// root). Throws DimensionMismatch on the zero polynomial.
std::size_t lowest_nonzero_power(const Polynomial& p);

/// Sum of 1/lambda over the nonzero roots of p, read off as
/// -[t^(k+1)] / [t^k] with t^k the lowest nonvanishing term.
Rational reciprocal_root_sum(const Polynomial& p);

// Sums of reciprocal eigenvalues, all obtained from characteristic
// polynomial coefficients (no root finding).
struct SpectralSums {
  Rational sum_inv_nonzero_L;           // over E(L) \ {0}
  Rational sum_inv_nonzero_N;           // over E(N) \ {0}, N = I - M
  std::vector<Rational> sum_inv_Lv;     // over E(L_v)
  std::vector<Rational> sum_inv_Nv;     // over E(N_v)
  std::size_t laplacian_zero_multiplicity = 0;
};

SpectralSums spectral_sums(const Graph& g);

struct SpectralIdentityCheck {
  bool kirchhoff = false;          // K = n * sum_inv_nonzero_L
  bool kemeny_pi2 = false;         // K_pi2 = 2m * sum_inv_nonzero_N
  bool resistance_centrality = false;  // R(v) = sum_inv_Lv(v) for all v
  bool weighted_resistance_centrality = false;  // R_pi(v) = sum_inv_Nv(v)
  bool laplacian_rank = false;     // 0 is a simple root of charpoly(L)

  bool all() const noexcept {
    return kirchhoff && kemeny_pi2 && resistance_centrality && weighted_resistance_centrality && laplacian_rank;
  }
};

SpectralIdentityCheck check_spectral_identities(const Graph& g, const SpectralSums& sums, const VertexInvariants& vinv,
                                                const GlobalInvariants& ginv);

/// One coefficient relation of P(u, v) = det(uI + vD - L).
struct CoefficientCheck {
  Rational actual;
  Rational expected;
  bool holds() const { return actual == expected; }
};

struct PuvRelations {
  CoefficientCheck u;   // (-1)^(n-1) n tau
  CoefficientCheck v;   // 2 (-1)^(n-1) m tau
  CoefficientCheck uu;  // (-1)^n tau K
  CoefficientCheck uv;  // 2 (-1)^n tau K_pi
  CoefficientCheck vv;  // (-1)^n tau K_pi2
  bool origin_vanishes = false;          // P(0,0) = 0
  bool u_slice_is_charpoly_L = false;    // P(u,0) = det(uI - L)
  bool v_slice_is_multiple_of_N = false; // P(0,v) = prod(deg) det(vI - N)

  bool all() const {
    return u.holds() && v.holds() && uu.holds() && uv.holds() && vv.holds() && origin_vanishes &&
           u_slice_is_charpoly_L && v_slice_is_multiple_of_N;
  }
};

PuvRelations puv_relations(const Graph& g, const BivariatePoly& p, const GlobalInvariants& ginv);
PuvRelations puv_relations(const Graph& g);

}  // namespace walkinv
