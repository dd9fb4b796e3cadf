#include <gtest/gtest.h>

#include "core/counting_checks.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"

using namespace planex;

TEST(CodegreeBound, HoldsOnPlanarFamilies) {
  for (const Graph& g : {Graph::icosahedron(), edge_blowup(Graph::complete(4), 4), Graph::complete_bipartite(2, 40),
                         edge_blowup(Graph::cycle(5), 6)}) {
    for (double eps : {0.1, 0.25, 0.5}) {
      const CodegreeBoundReport r = check_codegree_bound(g, Rational(3), eps);
      EXPECT_TRUE(r.holds()) << "eps " << eps;
      EXPECT_LE(static_cast<double>(r.heavy.size()), r.heavy_bound);
    }
  }
}

TEST(CodegreeBound, HeavyVerticesOfK2t) {
  const CodegreeBoundReport r = check_codegree_bound(Graph::complete_bipartite(2, 40), Rational(2), 0.25);
  EXPECT_EQ(r.heavy, (std::vector<Vertex>{0, 1}));
  EXPECT_GT(r.codegree_sum, 0u);
}

TEST(CodegreeBound, RejectsGraphsOutsideTheClass) {
  EXPECT_THROW(check_codegree_bound(Graph::complete_bipartite(3, 3), Rational(3), 0.25), Error);
}

TEST(EasyUpper, Holds) {
  for (const Graph& g : {Graph::icosahedron(), edge_blowup(Graph::complete(3), 3)}) {
    const EasyUpperReport r = verify_easyupper(g, Graph::complete(3), 1);
    EXPECT_TRUE(r.holds);
    const EasyUpperReport r2 = verify_easyupper(g, Graph::cycle(4), 1);
    EXPECT_TRUE(r2.holds);
  }
}

TEST(EasyUpper, RequiresMinimumDegreeCondition) {
  EXPECT_THROW(verify_easyupper(Graph::icosahedron(), Graph::path(3), 1), Error);
  EXPECT_NO_THROW(verify_easyupper(Graph::icosahedron(), Graph::path(3), 2));
}

TEST(OddPath, Holds) {
  for (const Graph& g : {Graph::icosahedron(), edge_blowup(Graph::complete(3), 4), Graph::complete_bipartite(2, 9)}) {
    for (unsigned m = 1; m <= 3; ++m) EXPECT_TRUE(verify_oddpath_bound(g, m).holds) << "m " << m;
  }
}
