#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace planex {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(std::size_t vertex_count) : n_(vertex_count) { build(); }

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : n_(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    require(e.u < n_ && e.v < n_, ErrorKind::InvalidArgument,
            "edge endpoint out of range: {" + std::to_string(e.u) + "," +
                std::to_string(e.v) + "} with n=" + std::to_string(n_));
    require(e.u != e.v, ErrorKind::InvalidArgument,
            "loop edge at vertex " + std::to_string(e.u));
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  require(dup == edges_.end(), ErrorKind::InvalidArgument,
          dup == edges_.end() ? "" : "repeated edge {" + std::to_string(dup->u) + "," +
                                         std::to_string(dup->v) + "}");
  build();
}

Graph::Graph(std::size_t vertex_count,
             std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) list.push_back(Edge{a, b});
  *this = Graph(vertex_count, list);
}

void Graph::build() {
  adj_.assign(n_, {});
  matrix_.assign(n_ * n_, 0);
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[static_cast<std::size_t>(e.u) * n_ + e.v] = 1;
    matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph(n, edges);
}

Graph Graph::cycle(std::size_t n) {
  require(n >= 3, ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
  return Graph(n, edges);
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(n, edges);
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Graph(a + b, edges);
}

Graph Graph::matching(std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    edges.push_back({static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1)});
  return Graph(2 * m, edges);
}

Graph Graph::icosahedron() {
  // 0 = north pole, 1..5 upper ring, 6..10 lower ring, 11 = south pole.
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= 5; ++i) {
    const Vertex next = i % 5 + 1;
    edges.push_back(make_edge(0, i));
    edges.push_back(make_edge(i, next));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(i, next + 5));
    edges.push_back(make_edge(i + 5, next + 5));
    edges.push_back(make_edge(11, i + 5));
  }
  return Graph(12, edges);
}

std::size_t Graph::codegree(Vertex a, Vertex b) const noexcept {
  const auto& na = adj_[a];
  const auto& nb = adj_[b];
  std::size_t count = 0;
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t best = n_ == 0 ? 0 : adj_[0].size();
  for (const auto& list : adj_) best = std::min(best, list.size());
  return best;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::has_isolated_vertices() const noexcept {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& l) { return l.empty(); });
}

std::size_t Graph::edge_index(Vertex a, Vertex b) const noexcept {
  const Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::without_edge(std::size_t index) const {
  require(index < edges_.size(), ErrorKind::InvalidArgument, "edge index out of range");
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph(n_, rest);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> position(n_, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] < n_, ErrorKind::InvalidArgument, "induced: vertex out of range");
    position[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (position[e.u] != static_cast<Vertex>(-1) && position[e.v] != static_cast<Vertex>(-1))
      edges.push_back(make_edge(position[e.u], position[e.v]));
  return Graph(keep.size(), edges);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  require(perm.size() == n_, ErrorKind::InvalidArgument, "relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(n_, edges);
}

Graph Graph::codegree_graph() const {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b)
      if (codegree(a, b) > 0) edges.push_back({a, b});
  return Graph(n_, edges);
}

Graph edge_blowup(const Graph& h, std::size_t k) {
  require(k > 0, ErrorKind::InvalidArgument, "edge_blowup: k must be positive");
  std::vector<std::size_t> sizes(h.edge_count(), k);
  return edge_blowup(h, sizes);
}

Graph edge_blowup(const Graph& h, std::span<const std::size_t> sizes) {
  require(sizes.size() == h.edge_count(), ErrorKind::InvalidArgument,
          "edge_blowup: one part size per edge required");
  const std::size_t total =
      h.vertex_count() + std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(h.vertex_count());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Edge& e = h.edges()[i];
    for (std::size_t j = 0; j < sizes[i]; ++j, ++next) {
      edges.push_back({e.u, next});
      edges.push_back({e.v, next});
    }
  }
  return Graph(total, edges);
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
}

}  // namespace planex
