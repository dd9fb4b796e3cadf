#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"

namespace planex {

/// Three vertices with three common neighbors, i.e. a K_{3,3} subgraph.
struct K33Witness {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

std::optional<K33Witness> find_k33(const Graph& g);

struct DensestSubgraph {
  Rational density;             // |E(S)| / |V(S)|, 0 for edgeless graphs
  std::vector<Vertex> vertices; // a subset S attaining it
};

/// Exact maximum of |E(S)|/|V(S)| over nonempty vertex subsets S.
DensestSubgraph max_density_subgraph(const Graph& g);

struct GclReport {
  bool member = false;
  std::optional<K33Witness> k33;
  DensestSubgraph densest;
  Rational bound;
};

/// Membership in the class of graphs with no K_{3,3} subgraph and every
/// subgraph having at most C times as many edges as vertices.
GclReport gcl_membership(const Graph& g, const Rational& c);

}  // namespace planex
