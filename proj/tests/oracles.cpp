#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace oracle {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Bivariate multiply(const Bivariate& a, const Bivariate& b) {
  Bivariate out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) out[{pa.first + pb.first, pa.second + pb.second}] += ca * cb;
  return out;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Rational leibniz_det(const RationalMatrix& mat) {
  const int n = static_cast<int>(mat.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(perm);
    for (int i = 0; i < n; ++i) term *= mat(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Bivariate leibniz_puv(const Graph& g) {
  const int n = static_cast<int>(g.order());
  const auto entry = [&](int i, int j) {
    Bivariate e;
    if (i == j) {
      const long d = static_cast<long>(g.degree(i));
      e[{1, 0}] = 1;
      e[{0, 1}] = d;
      e[{0, 0}] = -d;
    } else if (g.has_edge(i, j)) {
      e[{0, 0}] = 1;
    }
    return e;
  };
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Bivariate total;
  do {
    Bivariate term{{{0, 0}, Rational(permutation_sign(perm))}};
    for (int i = 0; i < n && !term.empty(); ++i) term = multiply(term, entry(i, perm[i]));
    for (const auto& [p, c] : term) total[p] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

std::uint64_t spanning_trees_by_subsets(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  const int n = static_cast<int>(g.order());
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (std::size_t e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = find(parent, static_cast<int>(edges[e].u));
      const int b = find(parent, static_cast<int>(edges[e].v));
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    count += acyclic;
  }
  return count;
}

std::uint64_t connected_graph_count(int n) {
  const auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<std::uint64_t> c(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    std::uint64_t value = std::uint64_t{1} << binom(k, 2);
    for (int j = 1; j < k; ++j) value -= binom(k - 1, j - 1) * c[j] * (std::uint64_t{1} << binom(k - j, 2));
    c[k] = value;
  }
  return c[n];
}

RationalMatrix gauss_jordan_inverse(const RationalMatrix& mat) {
  const std::size_t n = mat.rows();
  RationalMatrix a = mat;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> resistance_by_pseudoinverse(const Graph& g) {
  const std::size_t n = g.order();
  const Rational j_over_n = walkinv::make_rational(1, static_cast<long>(n));
  RationalMatrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational lij = i == k ? Rational(static_cast<long>(g.degree(i))) : Rational(g.has_edge(i, k) ? -1 : 0);
      shifted(i, k) = lij + j_over_n;
    }
  }
  RationalMatrix plus = gauss_jordan_inverse(shifted);
  std::vector<std::vector<Rational>> r(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) r[x][y] = plus(x, x) + plus(y, y) - 2 * plus(x, y);
  return r;
}

std::vector<std::vector<int>> bfs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    q.push(s);
    d[s][s] = 0;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t w = 0; w < n; ++w) {
        if (d[s][w] < 0 && g.has_edge(v, w)) {
          d[s][w] = d[s][v] + 1;
          q.push(w);
        }
      }
    }
  }
  return d;
}

Graph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  const int n = size(rng);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<walkinv::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    // Connectivity check by union-find; rejection keeps the sampler simple.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    int components = n;
    for (const auto& e : edges) {
      const int a = find(parent, static_cast<int>(e.u));
      const int b = find(parent, static_cast<int>(e.v));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) return Graph(n, edges);
  }
}

Graph random_tree(std::mt19937_64& rng, int min_n, int max_n) {
  std::uniform_int_distribution<int> size(min_n, max_n);
  const int n = size(rng);
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<walkinv::Edge> edges;
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> parent(0, k - 1);
    edges.push_back({label[k], label[parent(rng)]});
  }
  return Graph(n, edges);
}

RationalMatrix random_matrix(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  RationalMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = walkinv::make_rational(num(rng), den(rng));
  return m;
}

}  // namespace oracle
