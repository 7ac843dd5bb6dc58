#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

namespace walkinv {

using Vertex = std::size_t;

/// Unordered vertex pair. Graph stores edges canonicalised with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple connected undirected graph on vertices 0..n-1.
///
/// Construction validates the edge list and rejects loops, repeated edges,
/// out-of-range endpoints and disconnected input. n must be at least 2.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const;
  bool is_tree() const noexcept { return size() + 1 == order(); }
  bool is_regular() const noexcept;
  std::size_t max_degree() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;                      // sorted, u < v
  std::vector<std::vector<Vertex>> adjacency_;   // sorted neighbour lists
};

/// A tree together with a distinguished root.
struct RootedTree {
  RootedTree(Graph tree, Vertex root_vertex);

  Graph graph;
  Vertex root;
};

/// Throws NotATree unless g is a tree.
void require_tree(const Graph& g);

// Named families.
Graph path(std::size_t n);
Graph star(std::size_t n);  // centre 0, leaves 1..n-1
Graph complete(std::size_t n);
Graph cycle(std::size_t n);  // n >= 3

/// A k-clique whose vertex k-1 is joined by an edge to x, an x-y path with p
/// edges, and l leaves hanging off y (so y is the centre of a star K_{1,l}).
///
/// Labelling: clique 0..k-1, x = k, interior path vertices k+1..k+p-1,
/// y = k+p, leaves k+p+1..k+p+l. Order is k + p + 1 + l.
struct CliquePathStar {
  Graph graph;
  Vertex x;
  Vertex y;
};
CliquePathStar clique_path_star(std::size_t k, std::size_t p, std::size_t l);

// ---------------------------------------------------------------------------
// Exhaustive enumeration

inline constexpr std::size_t kMaxTreeEnumerationOrder = 9;
inline constexpr std::size_t kMaxGraphEnumerationOrder = 7;

/// n^(n-2), the number of labelled trees on n vertices.
std::uint64_t labelled_tree_count(std::size_t n);

/// Decodes a Pruefer sequence over {0..n-1} of length n-2.
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// The tree whose Pruefer sequence is the base-n expansion of index
/// (most significant digit first); index < n^(n-2).
Graph labelled_tree(std::size_t n, std::uint64_t index);

/// Number of edge subsets on n labelled vertices, 2^C(n,2).
std::uint64_t edge_subset_count(std::size_t n);

/// Graph formed by the edges selected by mask over the lexicographic list of
/// vertex pairs (0,1),(0,2),...,(n-2,n-1); nullopt when disconnected.
std::optional<Graph> graph_from_edge_mask(std::size_t n, std::uint64_t mask);

/// Single-consumer stream over an index space whose members decode to an
/// optional graph; indices decoding to nullopt are skipped.
class GraphStream {
 public:
  using Decoder = std::function<std::optional<Graph>(std::uint64_t)>;

  GraphStream(std::uint64_t count, Decoder decoder);

  /// Next graph, or nullopt once the stream is exhausted.
  std::optional<Graph> next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = const Graph*;
    using reference = const Graph&;

    iterator() = default;
    explicit iterator(GraphStream* stream) : stream_(stream) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

   private:
    GraphStream* stream_ = nullptr;
    std::optional<Graph> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  std::uint64_t count_;
  std::uint64_t position_ = 0;
  Decoder decoder_;
};

/// All n^(n-2) labelled trees, 2 <= n <= 9.
GraphStream all_labelled_trees(std::size_t n);

/// Every connected labelled simple graph on n vertices, 2 <= n <= 7.
GraphStream all_connected_graphs(std::size_t n);

// ---------------------------------------------------------------------------
// Random instances

/// Uniform labelled tree (random Pruefer sequence) with a uniform root.
RootedTree random_labelled_tree(std::size_t n, std::uint64_t seed);

/// Random labelled tree plus each remaining pair independently with
/// probability extra_edge_probability. Connected by construction; not uniform
/// over connected graphs.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Shortest-path distances

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), values_(n * n, 0) {}

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex x, Vertex y) const { return values_[x * n_ + y]; }
  std::uint32_t& operator()(Vertex x, Vertex y) { return values_[x * n_ + y]; }

  /// D(x) = sum over w of d(x, w).
  std::uint64_t row_sum(Vertex x) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> values_;
};

/// All-pairs BFS distances.
DistanceMatrix distances(const Graph& g);

/// BFS distances from a single source.
std::vector<std::uint32_t> distances_from(const Graph& g, Vertex source);

}  // namespace walkinv
