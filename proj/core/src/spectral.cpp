#include "walkinv/spectral.hpp"

#include "walkinv/error.hpp"

namespace walkinv {

std::size_t lowest_nonzero_power(const Polynomial& p) {
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) return k;
  throw Error(ErrorCode::DimensionMismatch, "zero polynomial has no lowest term");
}

Rational reciprocal_root_sum(const Polynomial& p) {
  const std::size_t k = lowest_nonzero_power(p);
  return -p.coefficient(k + 1) / p.coefficient(k);
}

SpectralSums spectral_sums(const Graph& g) {
  const std::size_t n = g.order();
  const RationalMatrix lap = laplacian(g);
  const RationalMatrix nm = n_matrix(g);
  const Polynomial char_l = charpoly(lap);
  SpectralSums sums;
  sums.laplacian_zero_multiplicity = lowest_nonzero_power(char_l);
  sums.sum_inv_nonzero_L = reciprocal_root_sum(char_l);
  sums.sum_inv_nonzero_N = reciprocal_root_sum(charpoly(nm));
  sums.sum_inv_Lv.resize(n);
  sums.sum_inv_Nv.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    sums.sum_inv_Lv[v] = reciprocal_root_sum(charpoly(delete_rc(lap, {v})));
    sums.sum_inv_Nv[v] = reciprocal_root_sum(charpoly(delete_rc(nm, {v})));
  }
  return sums;
}

SpectralIdentityCheck check_spectral_identities(const Graph& g, const SpectralSums& sums, const VertexInvariants& vinv,
                                                const GlobalInvariants& ginv) {
  const auto n = static_cast<unsigned long>(g.order());
  const auto m = static_cast<unsigned long>(g.size());
  SpectralIdentityCheck check;
  check.kirchhoff = ginv.K == n * sums.sum_inv_nonzero_L;
  check.kemeny_pi2 = ginv.K_pi2 == 2 * m * sums.sum_inv_nonzero_N;
  check.resistance_centrality = vinv.R == sums.sum_inv_Lv;
  check.weighted_resistance_centrality = vinv.R_pi == sums.sum_inv_Nv;
  check.laplacian_rank = sums.laplacian_zero_multiplicity == 1;
  return check;
}

PuvRelations puv_relations(const Graph& g, const BivariatePoly& p, const GlobalInvariants& ginv) {
  const long n = static_cast<long>(g.order());
  const long m = static_cast<long>(g.size());
  const Rational tau = ginv.tau;
  const long sign_n = n % 2 == 0 ? 1 : -1;  // (-1)^n
  PuvRelations rel;
  rel.u = {p.coefficient(1, 0), -sign_n * n * tau};
  rel.v = {p.coefficient(0, 1), -2 * sign_n * m * tau};
  rel.uu = {p.coefficient(2, 0), sign_n * tau * ginv.K};
  rel.uv = {p.coefficient(1, 1), 2 * sign_n * tau * ginv.K_pi};
  rel.vv = {p.coefficient(0, 2), sign_n * tau * ginv.K_pi2};
  rel.origin_vanishes = p.coefficient(0, 0) == 0;
  rel.u_slice_is_charpoly_L = p.restrict_v(0) == charpoly(laplacian(g));

  Rational degree_product = 1;
  for (Vertex v = 0; v < g.order(); ++v) degree_product *= static_cast<unsigned long>(g.degree(v));
  std::vector<Rational> scaled = charpoly(n_matrix(g)).coefficients();
  for (auto& c : scaled) c *= degree_product;
  rel.v_slice_is_multiple_of_N = p.restrict_u(0) == Polynomial(std::move(scaled));
  return rel;
}

PuvRelations puv_relations(const Graph& g) { return puv_relations(g, bivariate_det(g), global_invariants(g)); }

}  // namespace walkinv
