#include "core/gcl.hpp"

#include <cstdint>
#include <deque>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

namespace planex {
namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, std::int64_t,
                    boost::property<boost::edge_residual_capacity_t, std::int64_t,
                                    boost::property<boost::edge_reverse_t,
                                                    Traits::edge_descriptor>>>>;

class ClosureNetwork {
 public:
  ClosureNetwork(std::size_t nodes) : g_(nodes) {}

  void arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    auto capacity_map = boost::get(boost::edge_capacity, g_);
    auto reverse_map = boost::get(boost::edge_reverse, g_);
    const auto forward = boost::add_edge(from, to, g_).first;
    const auto backward = boost::add_edge(to, from, g_).first;
    capacity_map[forward] = capacity;
    capacity_map[backward] = 0;
    reverse_map[forward] = backward;
    reverse_map[backward] = forward;
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    return boost::push_relabel_max_flow(g_, s, t);
  }

  // Nodes reachable from s in the residual network: the source side of a min cut.
  std::vector<char> source_side(std::size_t s) const {
    auto residual = boost::get(boost::edge_residual_capacity, g_);
    std::vector<char> seen(boost::num_vertices(g_), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto [it, end] = boost::out_edges(v, g_); it != end; ++it) {
        const std::size_t w = boost::target(*it, g_);
        if (!seen[w] && residual[*it] > 0) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  FlowGraph g_;
};

std::size_t induced_edges(const Graph& g, const std::vector<char>& in) {
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) ++count;
  return count;
}

}  // namespace

std::optional<K33Witness> find_k33(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> common;
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.degree(b) < 3 || g.codegree(a, b) < 3) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.degree(c) < 3) continue;
        common.clear();
        for (Vertex w : g.neighbors(a))
          if (g.adjacent(b, w) && g.adjacent(c, w)) common.push_back(w);
        if (common.size() >= 3)
          return K33Witness{{a, b, c}, {common[0], common[1], common[2]}};
      }
    }
  }
  return std::nullopt;
}

DensestSubgraph max_density_subgraph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 0) return {Rational(0), {}};
  if (m == 0) return {Rational(0), {0}};

  std::vector<char> best(n, 1);
  std::int64_t p = static_cast<std::int64_t>(m);  // density p/q of `best`
  std::int64_t q = static_cast<std::int64_t>(n);

  // Dinkelbach: maximize q|E(S)| - p|V(S)| as a max-weight closure; any
  // positive value yields a strictly denser S.
  const std::int64_t infinite = p * static_cast<std::int64_t>(m + 1) + q * static_cast<std::int64_t>(m + 1);
  while (true) {
    const std::size_t source = 0, sink = 1, first_edge = 2, first_vertex = 2 + m;
    ClosureNetwork net(2 + m + n);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      net.arc(source, first_edge + i, q);
      net.arc(first_edge + i, first_vertex + e.u, infinite);
      net.arc(first_edge + i, first_vertex + e.v, infinite);
    }
    for (std::size_t v = 0; v < n; ++v) net.arc(first_vertex + v, sink, p);
    const std::int64_t flow = net.max_flow(source, sink);
    if (q * static_cast<std::int64_t>(m) - flow <= 0) break;

    const std::vector<char> side = net.source_side(source);
    std::vector<char> chosen(n, 0);
    std::int64_t size = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (side[first_vertex + v]) {
        chosen[v] = 1;
        ++size;
      }
    const auto edges = static_cast<std::int64_t>(induced_edges(g, chosen));
    if (size == 0 || edges * q <= p * size) break;  // numerical safety; cannot happen
    best = std::move(chosen);
    p = edges;
    q = size;
  }

  DensestSubgraph out{Rational(p, q), {}};
  for (Vertex v = 0; v < n; ++v)
    if (best[v]) out.vertices.push_back(v);
  return out;
}

GclReport gcl_membership(const Graph& g, const Rational& c) {
  GclReport report;
  report.bound = c;
  report.k33 = find_k33(g);
  report.densest = max_density_subgraph(g);
  report.member = !report.k33 && report.densest.density <= c;
  return report;
}

}  // namespace planex
