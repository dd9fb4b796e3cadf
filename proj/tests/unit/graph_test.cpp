#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"

using namespace planex;

TEST(Graph, NamedConstructors) {
  EXPECT_EQ(Graph::path(5).edge_count(), 4u);
  EXPECT_EQ(Graph::cycle(6).edge_count(), 6u);
  EXPECT_EQ(Graph::complete(5).edge_count(), 10u);
  EXPECT_EQ(Graph::complete_bipartite(3, 3).edge_count(), 9u);
  EXPECT_EQ(Graph::matching(3).vertex_count(), 6u);
  EXPECT_EQ(Graph::star(4).max_degree(), 4u);
  EXPECT_TRUE(Graph::empty(3).has_isolated_vertices());
}

TEST(Graph, IcosahedronIsFiveRegular) {
  const Graph g = Graph::icosahedron();
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 30u);
  EXPECT_EQ(g.min_degree(), 5u);
  EXPECT_EQ(g.max_degree(), 5u);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
  EXPECT_EQ(g.edge_index(3, 1), 2u);
  EXPECT_EQ(g.edge_index(2, 3), g.edge_count());
}

TEST(Graph, Codegree) {
  const Graph c4 = Graph::cycle(4);
  EXPECT_EQ(c4.codegree(0, 2), 2u);
  EXPECT_EQ(c4.codegree(0, 1), 0u);
  const Graph cg = c4.codegree_graph();
  EXPECT_EQ(cg.edge_count(), 2u);
  EXPECT_TRUE(cg.adjacent(0, 2));
}

TEST(Graph, InducedAndRelabeled) {
  const Graph k4 = Graph::complete(4);
  const std::vector<Vertex> keep{3, 1, 0};
  EXPECT_EQ(k4.induced(keep), Graph::complete(3));
  const std::vector<Vertex> perm{1, 2, 3, 0};
  const Graph p = Graph::path(4).relabeled(perm);
  EXPECT_TRUE(p.adjacent(1, 2));
  EXPECT_TRUE(p.adjacent(3, 0));
  EXPECT_FALSE(p.adjacent(0, 1));
}

TEST(Graph, WithoutEdge) {
  const Graph g = Graph::cycle(4).without_edge(0);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_FALSE(g.has_isolated_vertices());
}

TEST(EdgeBlowup, UniformAndPerEdge) {
  const Graph b = edge_blowup(Graph::complete(3), 2);
  EXPECT_EQ(b.vertex_count(), 9u);
  EXPECT_EQ(b.edge_count(), 12u);
  EXPECT_EQ(edge_blowup(Graph::complete(2), 7), Graph::complete_bipartite(2, 7));

  const std::vector<std::size_t> sizes{1, 0, 3};
  const Graph p = edge_blowup(Graph::complete(3), sizes);
  EXPECT_EQ(p.vertex_count(), 7u);
  EXPECT_EQ(p.edge_count(), 8u);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(Graph::cycle(4)), "Cl");
  EXPECT_EQ(from_graph6("Bw"), Graph::complete(3));
  EXPECT_EQ(from_graph6(">>graph6<<Bw"), Graph::complete(3));
  EXPECT_THROW(from_graph6("B"), Error);
}

TEST(Graph6, RoundTrip) {
  for (const Graph& g : {Graph::icosahedron(), Graph::complete_bipartite(3, 4), edge_blowup(Graph::cycle(5), 3),
                         Graph::empty(1), Graph::empty(70)}) {
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  const Graph big = edge_blowup(Graph::complete(4), 12);
  EXPECT_GT(big.vertex_count(), 62u);
  EXPECT_EQ(from_graph6(to_graph6(big)), big);
}

TEST(GraphJson, RoundTrip) {
  const Graph g = Graph::icosahedron();
  const std::string text = graph_to_json(g);
  EXPECT_EQ(graph_from_json(text), g);
  EXPECT_EQ(graph_to_json(graph_from_json(text)), text);
  EXPECT_EQ(graph_from_json(R"({"n": 3, "edges": [[2, 0], [0, 1]]})"), Graph(3, {{0, 1}, {0, 2}}));
  EXPECT_THROW(graph_from_json(R"({"n": 2})"), Error);
  EXPECT_THROW(graph_from_json("not json"), Error);
}

TEST(Descriptor, Forms) {
  EXPECT_EQ(parse_graph_descriptor("P5"), Graph::path(5));
  EXPECT_EQ(parse_graph_descriptor(" C6 "), Graph::cycle(6));
  EXPECT_EQ(parse_graph_descriptor("K2,7"), Graph::complete_bipartite(2, 7));
  EXPECT_EQ(parse_graph_descriptor("g6:Bw"), Graph::complete(3));
  EXPECT_EQ(parse_graph_descriptor("blowup(K3,2)"), edge_blowup(Graph::complete(3), 2));
  EXPECT_EQ(parse_graph_descriptor("icosahedron-").edge_count(), 29u);
  EXPECT_EQ(parse_graph_descriptor(R"({"n":2,"edges":[[0,1]]})"), Graph::complete(2));
  EXPECT_THROW(parse_graph_descriptor("Q3"), Error);
  EXPECT_THROW(parse_graph_descriptor(""), Error);
}
