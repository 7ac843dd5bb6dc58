#include "walkinv/invariants.hpp"

#include <string>

#include "walkinv/error.hpp"

namespace walkinv {

namespace {

Rational as_rational(std::uint64_t value) { return Rational(static_cast<unsigned long>(value)); }

}  // namespace

Integer spanning_tree_count(const Graph& g) {
  const Rational tau = det(delete_rc(laplacian(g), {0}));
  return tau.get_num();
}

ResistanceMatrix resistance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  const RationalMatrix lap = laplacian(g);
  const Integer tau = det(delete_rc(lap, {0})).get_num();
  ResistanceMatrix res(n, tau);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      // With n = 2 the minor is the empty matrix, whose determinant is 1.
      Rational r = (n == 2 ? Rational(1) : det(delete_rc(lap, {v, w}))) / tau;
      res(w, v) = r;
      res(v, w) = std::move(r);
    }
  }
  return res;
}

std::vector<Rational> resistances_from(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  if (source >= n) throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(source));
  const RationalMatrix grounded_inverse = inverse(delete_rc(laplacian(g), {source}));
  std::vector<Rational> row(n);
  for (Vertex w = 0, k = 0; w < n; ++w) {
    if (w == source) continue;
    row[w] = grounded_inverse(k, k);
    ++k;
  }
  return row;
}

VertexInvariants vertex_invariants(const Graph& g, const DistanceMatrix& dist, const ResistanceMatrix& res) {
  const std::size_t n = g.order();
  VertexInvariants out{std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(n),
                       std::vector<Rational>(n)};
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t d_sum = 0;
    std::uint64_t d_pi_sum = 0;
    Rational r_sum = 0;
    Rational r_pi_sum = 0;
    for (Vertex w = 0; w < n; ++w) {
      const auto deg = static_cast<unsigned long>(g.degree(w));
      d_sum += dist(v, w);
      d_pi_sum += deg * dist(v, w);
      r_sum += res(v, w);
      r_pi_sum += deg * res(v, w);
    }
    out.D[v] = as_rational(d_sum);
    out.D_pi[v] = as_rational(d_pi_sum);
    out.R[v] = std::move(r_sum);
    out.R_pi[v] = std::move(r_pi_sum);
  }
  return out;
}

VertexInvariants vertex_invariants(const Graph& g) {
  return vertex_invariants(g, distances(g), resistance_matrix(g));
}

GlobalInvariants global_invariants(const Graph& g, const DistanceMatrix& dist, const ResistanceMatrix& res) {
  const std::size_t n = g.order();
  GlobalInvariants out;
  out.n = n;
  out.m = g.size();
  out.tau = res.spanning_trees();
  // Ordered-pair sums, halved at the end.
  std::uint64_t w2 = 0;
  std::uint64_t schultz2 = 0;
  std::uint64_t gutman2 = 0;
  Rational k2 = 0;
  Rational k_pi2 = 0;
  Rational k_pi22 = 0;
  for (Vertex x = 0; x < n; ++x) {
    const auto dx = static_cast<unsigned long>(g.degree(x));
    for (Vertex y = 0; y < n; ++y) {
      const auto dy = static_cast<unsigned long>(g.degree(y));
      w2 += dist(x, y);
      schultz2 += (dx + dy) * dist(x, y);
      gutman2 += dx * dy * dist(x, y);
      k2 += res(x, y);
      k_pi2 += dy * res(x, y);
      k_pi22 += dx * dy * res(x, y);
    }
  }
  out.W = as_rational(w2) / 2;
  out.schultz = as_rational(schultz2) / 2;
  out.gutman = as_rational(gutman2) / 2;
  out.K = k2 / 2;
  out.K_pi = k_pi2 / 2;
  out.K_pi2 = k_pi22 / 2;
  return out;
}

GlobalInvariants global_invariants(const Graph& g) { return global_invariants(g, distances(g), resistance_matrix(g)); }

TreeIdentityReport tree_identities_report(const Graph& tree, const DistanceMatrix& dist, const ResistanceMatrix& res,
                                          const VertexInvariants& vinv, const GlobalInvariants& ginv) {
  require_tree(tree);
  const std::size_t n = tree.order();
  const auto nn = static_cast<long>(n);
  const Rational m = static_cast<unsigned long>(tree.size());
  TreeIdentityReport report;

  report.resistance_is_distance = true;
  for (Vertex x = 0; x < n && report.resistance_is_distance; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (res(x, y) != static_cast<unsigned long>(dist(x, y))) {
        report.resistance_is_distance = false;
        break;
      }

  report.weighted_centrality_formula = true;
  for (Vertex x = 0; x < n; ++x)
    if (vinv.D_pi[x] != 2 * vinv.D[x] - m) report.weighted_centrality_formula = false;

  report.schultz_formula = ginv.schultz == 4 * ginv.W - nn * (nn - 1);
  report.gutman_formula = ginv.gutman == 4 * ginv.W - (nn - 1) * (2 * nn - 1);
  report.kirchhoff_is_wiener = ginv.K == ginv.W;
  report.k_pi_is_half_schultz = ginv.K_pi == ginv.schultz / 2;
  report.k_pi2_is_gutman = ginv.K_pi2 == ginv.gutman;
  return report;
}

TreeIdentityReport tree_identities_report(const Graph& tree) {
  require_tree(tree);
  const DistanceMatrix dist = distances(tree);
  const ResistanceMatrix res = resistance_matrix(tree);
  return tree_identities_report(tree, dist, res, vertex_invariants(tree, dist, res), global_invariants(tree, dist, res));
}

std::pair<std::size_t, std::size_t> branch_sizes(const Graph& tree, Vertex x, Edge e) {
  require_tree(tree);
  if (x >= tree.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x));
  if (!tree.has_edge(e.u, e.v)) {
    throw Error(ErrorCode::NotAnEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  // Flood from x without crossing e.
  std::vector<char> seen(tree.order(), 0);
  std::vector<Vertex> stack{x};
  seen[x] = 1;
  std::size_t side = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : tree.neighbors(v)) {
      const bool crossing = (v == e.u && w == e.v) || (v == e.v && w == e.u);
      if (crossing || seen[w]) continue;
      seen[w] = 1;
      ++side;
      stack.push_back(w);
    }
  }
  return {side, tree.order() - side};
}

}  // namespace walkinv
