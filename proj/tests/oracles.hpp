#pragma once

// Independent reference computations used only by the tests. None of these
// call the library routine they are compared against.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "walkinv/graph.hpp"
#include "walkinv/linalg.hpp"
#include "walkinv/rational.hpp"

namespace oracle {

using walkinv::Graph;
using walkinv::Integer;
using walkinv::Rational;
using walkinv::RationalMatrix;
using walkinv::Vertex;

/// Leibniz expansion over all permutations (dim <= 7).
Rational leibniz_det(const RationalMatrix& mat);

/// Sparse bivariate polynomial keyed by (power of u, power of v).
using Bivariate = std::map<std::pair<int, int>, Rational>;

/// det(uI + vD - L) by Leibniz expansion with polynomial entries.
Bivariate leibniz_puv(const Graph& g);

/// Spanning trees counted by testing every (n-1)-edge subset for acyclicity.
std::uint64_t spanning_trees_by_subsets(const Graph& g);

/// Connected labelled graphs on n vertices from the recurrence
/// c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2).
std::uint64_t connected_graph_count(int n);

/// Plain Gauss-Jordan inverse, no pivot search beyond the first nonzero.
RationalMatrix gauss_jordan_inverse(const RationalMatrix& mat);

/// Effective resistance from the pseudo-inverse L+ = (L + J/n)^-1 - J/n.
std::vector<std::vector<Rational>> resistance_by_pseudoinverse(const Graph& g);

/// BFS distances written independently of the library.
std::vector<std::vector<int>> bfs_distances(const Graph& g);

/// Random connected graph by rejection sampling over edge masks; n <= 10.
Graph random_graph(std::mt19937_64& rng, int min_n, int max_n);

/// Random tree by attaching each vertex k >= 1 to a uniform earlier vertex,
/// then relabelling by a random permutation (not uniform over trees).
Graph random_tree(std::mt19937_64& rng, int min_n, int max_n);

/// Random square matrix with small rational entries.
RationalMatrix random_matrix(std::mt19937_64& rng, int dim);

}  // namespace oracle
