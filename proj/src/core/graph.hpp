#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace planex {

using Vertex = std::uint32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(Vertex a, Vertex b);

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically, so two graphs compare equal iff
/// they have the same vertex count and the same labeled edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Throws Error(InvalidArgument) on loops, out-of-range endpoints or
  /// repeated pairs (after normalizing each pair to u < v).
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count,
        std::initializer_list<std::pair<Vertex, Vertex>> edges);

  static Graph empty(std::size_t n) { return Graph(n); }
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph complete(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);
  /// Matching on `m` disjoint edges.
  static Graph matching(std::size_t m);
  static Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }
  /// Skeleton of the icosahedron: 12 vertices, 30 edges, 5-regular.
  static Graph icosahedron();

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  std::size_t codegree(Vertex a, Vertex b) const noexcept;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool has_isolated_vertices() const noexcept;

  /// Index of edge {a,b} in edges(), or edge_count() if absent.
  std::size_t edge_index(Vertex a, Vertex b) const noexcept;

  Graph without_edge(std::size_t edge_index) const;
  /// Subgraph induced by `keep`, relabeled to 0..keep.size()-1 in the given order.
  Graph induced(std::span<const Vertex> keep) const;
  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Graph on the same vertex set with an edge wherever codegree >= 1.
  Graph codegree_graph() const;

  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void build();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Replace every edge xy of `h` by `k` new vertices adjacent to x and y.
Graph edge_blowup(const Graph& h, std::size_t k);

/// Per-edge variant: edge i (in h.edges() order) is replaced by sizes[i] new
/// vertices. A size of zero simply deletes that edge.
Graph edge_blowup(const Graph& h, std::span<const std::size_t> sizes);

/// Short human-readable description such as "n=4 m=4".
std::string describe(const Graph& g);

}  // namespace planex
