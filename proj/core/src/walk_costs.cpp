#include "walkinv/walk_costs.hpp"

#include <string>

#include "walkinv/error.hpp"
#include "walkinv/linalg.hpp"

namespace walkinv {

namespace {

unsigned long deg(const Graph& g, Vertex v) { return static_cast<unsigned long>(g.degree(v)); }

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
}

[[noreturn]] void mismatch(const std::string& what, Vertex x, const Rational& direct, const Rational& formula) {
  throw Error(ErrorCode::FormulaMismatch, what + " at vertex " + std::to_string(x) + ": direct " + to_string(direct) +
                                              " vs formula " + to_string(formula));
}

}  // namespace

std::vector<Rational> hitting_times_to(const Graph& g, Vertex target) {
  require_vertex(g, target);
  const std::size_t n = g.order();
  const RationalMatrix system = delete_rc(laplacian(g), {target});
  std::vector<Rational> rhs;
  rhs.reserve(n - 1);
  for (Vertex x = 0; x < n; ++x)
    if (x != target) rhs.emplace_back(deg(g, x));
  const std::vector<Rational> h = solve(system, rhs);
  std::vector<Rational> column(n);
  for (Vertex x = 0, k = 0; x < n; ++x)
    if (x != target) column[x] = h[k++];
  return column;
}

HittingMatrix hitting_matrix_linear(const Graph& g) {
  const std::size_t n = g.order();
  HittingMatrix hit(n);
  for (Vertex y = 0; y < n; ++y) {
    const auto column = hitting_times_to(g, y);
    for (Vertex x = 0; x < n; ++x) hit(x, y) = column[x];
  }
  return hit;
}

HittingMatrix hitting_matrix_tetali(const Graph& g, const ResistanceMatrix& res) {
  const std::size_t n = g.order();
  HittingMatrix hit(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      Rational sum = 0;
      for (Vertex w = 0; w < n; ++w) sum += deg(g, w) * (res(x, y) + res(w, y) - res(w, x));
      hit(x, y) = sum / 2;
    }
  }
  return hit;
}

HittingMatrix hitting_matrix_tetali(const Graph& g) { return hitting_matrix_tetali(g, resistance_matrix(g)); }

Rational commute(const Graph& g, Vertex x, Vertex y) {
  require_vertex(g, x);
  require_vertex(g, y);
  return hitting_times_to(g, y)[x] + hitting_times_to(g, x)[y];
}

Rational return_time(const Graph& g, Vertex x) {
  const auto column = hitting_times_to(g, x);
  Rational sum = 0;
  for (Vertex z : g.neighbors(x)) sum += column[z];
  return 1 + sum / deg(g, x);
}

CostTable cost_sums(const Graph& g, const HittingMatrix& hit) {
  const std::size_t n = g.order();
  CostTable t{std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(n),
              Rational(0)};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      t.cc[x] += hit(x, y);
      t.rc[x] += hit(y, x);
      t.cc_pi[x] += deg(g, y) * hit(x, y);
      t.rc_pi[x] += deg(g, y) * hit(y, x);
    }
  }
  t.kemeny = t.cc_pi.front();
  return t;
}

CostTable cost_formulas(const Graph& g, const VertexInvariants& vinv, const GlobalInvariants& ginv) {
  const std::size_t n = g.order();
  const Rational m = static_cast<unsigned long>(g.size());
  const Rational half_n = make_rational(static_cast<long>(n), 2);
  CostTable t{std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(n), std::vector<Rational>(n),
              ginv.K_pi2};
  for (Vertex x = 0; x < n; ++x) {
    t.cc[x] = m * vinv.R[x] - half_n * vinv.R_pi[x] + ginv.K_pi;
    t.rc[x] = m * vinv.R[x] + half_n * vinv.R_pi[x] - ginv.K_pi;
    t.rc_pi[x] = 2 * m * vinv.R_pi[x] - ginv.K_pi2;
    t.cc_pi[x] = ginv.K_pi2;
  }
  return t;
}

CostTable cost_table(const Graph& g, const HittingMatrix& hit, const VertexInvariants& vinv,
                     const GlobalInvariants& ginv) {
  CostTable direct = cost_sums(g, hit);
  const CostTable formula = cost_formulas(g, vinv, ginv);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (direct.cc[x] != formula.cc[x]) mismatch("CC", x, direct.cc[x], formula.cc[x]);
    if (direct.rc[x] != formula.rc[x]) mismatch("RC", x, direct.rc[x], formula.rc[x]);
    if (direct.rc_pi[x] != formula.rc_pi[x]) mismatch("RC_pi", x, direct.rc_pi[x], formula.rc_pi[x]);
    if (direct.cc_pi[x] != formula.cc_pi[x]) mismatch("CC_pi", x, direct.cc_pi[x], formula.cc_pi[x]);
  }
  return direct;
}

CostTable cost_table(const Graph& g) { return analyze(g).costs; }

std::pair<Rational, Rational> zw_identity_check(const Graph& g, const CostTable& costs, Vertex x) {
  require_vertex(g, x);
  Rational lhs = 0;
  for (Vertex z : g.neighbors(x)) lhs += costs.cc[x] - costs.cc[z];
  const long n = static_cast<long>(g.order());
  const long m = static_cast<long>(g.size());
  Rational rhs = n * static_cast<long>(g.degree(x)) - 2 * m;
  return {lhs, rhs};
}

std::pair<Rational, Rational> zw_identity_check(const Graph& g, Vertex x) {
  const HittingMatrix hit = hitting_matrix_linear(g);
  return zw_identity_check(g, cost_sums(g, hit), x);
}

HittingBoundsCheck tree_hitting_bounds_check(const Graph& tree, const HittingMatrix& hit, const DistanceMatrix& dist,
                                             Vertex x, Vertex y) {
  require_tree(tree);
  require_vertex(tree, x);
  require_vertex(tree, y);
  if (x == y) throw Error(ErrorCode::VertexOutOfRange, "bounds need distinct vertices");
  HittingBoundsCheck out;
  out.hitting = hit(x, y);
  out.distance = dist(x, y);
  const long d = out.distance;
  const long m = static_cast<long>(tree.size());
  const Rational lower = d * d;
  const Rational upper = d * (2 * m - d);
  out.lower_holds = lower <= out.hitting;
  out.upper_holds = out.hitting <= upper;
  out.lower_tight = out.hitting == lower;
  out.upper_tight = out.hitting == upper;

  // `a` lies on the b-c path iff d(b,a) + d(a,c) = d(b,c).
  const auto on_path = [&](Vertex a, Vertex b, Vertex c) { return dist(b, a) + dist(a, c) == dist(b, c); };
  bool lower_geometric = true;
  bool upper_geometric = true;
  for (Vertex w = 0; w < tree.order(); ++w) {
    const bool on_xy = on_path(w, x, y);
    if (!on_xy && !on_path(y, w, x)) lower_geometric = false;
    if (!on_xy && !on_path(x, w, y)) upper_geometric = false;
  }
  if (lower_geometric != out.lower_tight || upper_geometric != out.upper_tight) {
    throw Error(ErrorCode::FormulaMismatch, "hitting bound tightness disagrees with path characterisation for (" +
                                                std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return out;
}

HittingBoundsCheck tree_hitting_bounds_check(const Graph& tree, Vertex x, Vertex y) {
  require_tree(tree);
  return tree_hitting_bounds_check(tree, hitting_matrix_linear(tree), distances(tree), x, y);
}

std::uint64_t tree_wiener_index(const Graph& tree) {
  require_tree(tree);
  const std::size_t n = tree.order();
  // Iterative DFS from 0; each non-root vertex v contributes size(v) * (n - size(v)).
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, n);
  order.reserve(n);
  std::vector<Vertex> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] == n) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::uint64_t> subtree(n, 1);
  std::uint64_t wiener = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v == 0) continue;
    wiener += subtree[v] * (n - subtree[v]);
    subtree[parent[v]] += subtree[v];
  }
  return wiener;
}

TreeCoverCosts tree_cover_costs(const RootedTree& tree) {
  const auto n = static_cast<unsigned long>(tree.graph.order());
  const Integer wiener = static_cast<unsigned long>(tree_wiener_index(tree.graph));
  Integer centrality = 0;
  for (std::uint32_t d : distances_from(tree.graph, tree.root)) centrality += static_cast<unsigned long>(d);
  return {2 * wiener - centrality, (2 * n - 1) * centrality - 2 * wiener};
}

GraphAnalysis analyze(const Graph& g) {
  DistanceMatrix dist = distances(g);
  ResistanceMatrix res = resistance_matrix(g);
  VertexInvariants vinv = vertex_invariants(g, dist, res);
  GlobalInvariants ginv = global_invariants(g, dist, res);
  HittingMatrix hit = hitting_matrix_linear(g);
  CostTable costs = cost_table(g, hit, vinv, ginv);
  return {std::move(dist), std::move(res), std::move(vinv), std::move(ginv), std::move(hit), std::move(costs)};
}

}  // namespace walkinv
