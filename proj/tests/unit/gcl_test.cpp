#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/gcl.hpp"
#include "core/graph.hpp"
#include "core/planarity.hpp"

using namespace planex;

TEST(Densest, CompleteGraphs) {
  const DensestSubgraph d = max_density_subgraph(Graph::complete(5));
  EXPECT_EQ(d.density, Rational(2));
  EXPECT_EQ(d.vertices.size(), 5u);
  EXPECT_EQ(max_density_subgraph(Graph::empty(4)).density, Rational(0));
}

TEST(Densest, FindsDenseCore) {
  // K4 with a pendant path: the core K4 has density 3/2.
  const Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  const DensestSubgraph d = max_density_subgraph(g);
  EXPECT_EQ(d.density, Rational(3, 2));
  EXPECT_EQ(d.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(K33, Detection) {
  EXPECT_TRUE(find_k33(Graph::complete_bipartite(3, 3)).has_value());
  EXPECT_FALSE(find_k33(Graph::complete_bipartite(2, 9)).has_value());
  EXPECT_FALSE(find_k33(Graph::icosahedron()).has_value());
}

TEST(Gcl, Membership) {
  EXPECT_TRUE(gcl_membership(Graph::icosahedron(), Rational(3)).member);
  EXPECT_FALSE(gcl_membership(Graph::icosahedron(), Rational(2)).member);
  EXPECT_FALSE(gcl_membership(Graph::complete_bipartite(3, 3), Rational(3)).member);
  EXPECT_TRUE(gcl_membership(edge_blowup(Graph::complete(3), 9), Rational(2)).member);
  EXPECT_TRUE(gcl_membership(edge_blowup(Graph::complete(4), 3), Rational(2)).member);
  // K5 has density 2 and no K_{3,3}, so it is in the class for C = 2 despite being nonplanar.
  EXPECT_TRUE(gcl_membership(Graph::complete(5), Rational(2)).member);
  EXPECT_FALSE(gcl_membership(Graph::complete(5), Rational(19, 10)).member);
}

TEST(Planarity, SmallGraphs) {
  EXPECT_TRUE(is_planar_small(Graph::complete(4)));
  EXPECT_FALSE(is_planar_small(Graph::complete(5)));
  EXPECT_FALSE(is_planar_small(Graph::complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar_small(Graph::cycle(10)));
  // Petersen graph: nonplanar with no K5 or K33 subgraph, only minors.
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_FALSE(is_planar_small(petersen));
  // K5 minus an edge and the octahedron are planar.
  EXPECT_TRUE(is_planar_small(Graph::complete(5).without_edge(0)));
  const Graph octahedron(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
                             {3, 4}, {3, 5}});
  EXPECT_TRUE(is_planar_small(octahedron));
  EXPECT_THROW(is_planar_small(Graph::icosahedron()), Error);
}
