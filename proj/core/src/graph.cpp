#include "walkinv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <utility>

#include "walkinv/error.hpp"

namespace walkinv {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_order(std::size_t n, std::size_t minimum, const char* family) {
  if (n < minimum) {
    throw Error(ErrorCode::SizeTooSmall, std::string(family) + " needs n >= " + std::to_string(minimum) +
                                             ", got " + std::to_string(n));
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  require_order(n, 2, "graph");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge " + pair_text(e.u, e.v) + " with n = " + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + pair_text(dup->u, dup->v) + " listed twice");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorCode::Disconnected,
                "only " + std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable from 0");
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::is_regular() const noexcept {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [&](const auto& list) { return list.size() == adjacency_.front().size(); });
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

RootedTree::RootedTree(Graph tree, Vertex root_vertex) : graph(std::move(tree)), root(root_vertex) {
  require_tree(graph);
  if (root >= graph.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "root " + std::to_string(root));
  }
}

void require_tree(const Graph& g) {
  if (!g.is_tree()) {
    throw Error(ErrorCode::NotATree, "graph has n = " + std::to_string(g.order()) +
                                         ", m = " + std::to_string(g.size()));
  }
}

Graph path(std::size_t n) {
  require_order(n, 2, "path");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph star(std::size_t n) {
  require_order(n, 2, "star");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  require_order(n, 2, "complete");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

CliquePathStar clique_path_star(std::size_t k, std::size_t p, std::size_t l) {
  if (k < 2 || p < 1 || l < 1) {
    throw Error(ErrorCode::SizeTooSmall, "clique_path_star needs k >= 2, p >= 1, l >= 1");
  }
  const Vertex x = k;
  const Vertex y = k + p;
  const std::size_t n = k + p + 1 + l;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) edges.push_back({a, b});
  edges.push_back({k - 1, x});
  for (Vertex v = x; v < y; ++v) edges.push_back({v, v + 1});
  for (Vertex leaf = y + 1; leaf < n; ++leaf) edges.push_back({y, leaf});
  return {Graph(n, edges), x, y};
}

// ---------------------------------------------------------------------------

std::uint64_t labelled_tree_count(std::size_t n) {
  if (n < 2) return 0;
  std::uint64_t count = 1;
  for (std::size_t i = 2; i < n; ++i) count *= n;
  return count;
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  require_order(n, 2, "tree");
  if (sequence.size() != n - 2) {
    throw Error(ErrorCode::DimensionMismatch, "Pruefer sequence must have length n - 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(ErrorCode::VertexOutOfRange, "Pruefer entry " + std::to_string(v));
    ++degree[v];
  }
  // Linear-time decoding: `leaf` tracks the smallest current leaf.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex v : sequence) {
    edges.push_back({leaf, v});
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Graph(n, edges);
}

Graph labelled_tree(std::size_t n, std::uint64_t index) {
  require_order(n, 2, "tree");
  if (index >= labelled_tree_count(n)) {
    throw Error(ErrorCode::IndexOutOfRange, "tree index " + std::to_string(index));
  }
  std::vector<Vertex> sequence(n - 2);
  for (std::size_t i = sequence.size(); i-- > 0;) {
    sequence[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return tree_from_pruefer(n, sequence);
}

std::uint64_t edge_subset_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  if (pairs >= 64) throw Error(ErrorCode::NTooLarge, "edge subsets of n = " + std::to_string(n));
  return std::uint64_t{1} << pairs;
}

std::optional<Graph> graph_from_edge_mask(std::size_t n, std::uint64_t mask) {
  if (mask >= edge_subset_count(n)) {
    throw Error(ErrorCode::IndexOutOfRange, "edge mask " + std::to_string(mask));
  }
  // Connectivity on bitsets first so that disconnected masks never allocate.
  std::vector<std::uint32_t> nbr(n, 0);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++bit) {
      if (mask >> bit & 1U) {
        nbr[a] |= 1U << b;
        nbr[b] |= 1U << a;
        edges.push_back({a, b});
      }
    }
  }
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (Vertex v = 0; v < n; ++v)
      if (frontier >> v & 1U) next |= nbr[v];
    frontier = next & ~reached;
    reached |= next;
  }
  if (reached != (n == 32 ? ~0U : (1U << n) - 1)) return std::nullopt;
  return Graph(n, edges);
}

GraphStream::GraphStream(std::uint64_t count, Decoder decoder) : count_(count), decoder_(std::move(decoder)) {}

std::optional<Graph> GraphStream::next() {
  while (position_ < count_) {
    if (auto g = decoder_(position_++)) return g;
  }
  return std::nullopt;
}

GraphStream all_labelled_trees(std::size_t n) {
  if (n > kMaxTreeEnumerationOrder) {
    throw Error(ErrorCode::NTooLarge, "tree enumeration limited to n <= 9, got " + std::to_string(n));
  }
  require_order(n, 2, "tree enumeration");
  return GraphStream(labelled_tree_count(n), [n](std::uint64_t i) { return std::optional<Graph>(labelled_tree(n, i)); });
}

GraphStream all_connected_graphs(std::size_t n) {
  if (n > kMaxGraphEnumerationOrder) {
    throw Error(ErrorCode::NTooLarge, "graph enumeration limited to n <= 7, got " + std::to_string(n));
  }
  require_order(n, 2, "graph enumeration");
  return GraphStream(edge_subset_count(n), [n](std::uint64_t mask) { return graph_from_edge_mask(n, mask); });
}

// ---------------------------------------------------------------------------

RootedTree random_labelled_tree(std::size_t n, std::uint64_t seed) {
  require_order(n, 2, "random tree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> sequence(n - 2);
  for (auto& v : sequence) v = pick(rng);
  Graph tree = tree_from_pruefer(n, sequence);
  const Vertex root = pick(rng);
  return RootedTree(std::move(tree), root);
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::uint64_t seed) {
  const RootedTree base = random_labelled_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::bernoulli_distribution extra(extra_edge_probability);
  std::vector<Edge> edges = base.graph.edges();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!base.graph.has_edge(a, b) && extra(rng)) edges.push_back({a, b});
    }
  }
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------

std::uint64_t DistanceMatrix::row_sum(Vertex x) const {
  std::uint64_t total = 0;
  for (Vertex y = 0; y < n_; ++y) total += (*this)(x, y);
  return total;
}

std::vector<std::uint32_t> distances_from(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  if (source >= n) throw Error(ErrorCode::VertexOutOfRange, "source " + std::to_string(source));
  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<Vertex> queue{source};
  queue.reserve(n);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix result(n);
  for (Vertex x = 0; x < n; ++x) {
    const auto row = distances_from(g, x);
    for (Vertex y = 0; y < n; ++y) result(x, y) = row[y];
  }
  return result;
}

}  // namespace walkinv
