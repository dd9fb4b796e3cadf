#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "core/graph.hpp"

namespace planex {

/// Backtracking search for injective adjacency-preserving maps
/// pattern -> host (non-induced). Pattern vertices are visited in a
/// connectivity-first order so each new vertex is usually constrained by an
/// already-placed neighbor; host candidates are pruned by degree.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host);

  /// Invokes `visit(image)` for every injection, where image[p] is the host
  /// vertex assigned to pattern vertex p. Returning false stops the search.
  void for_each(const std::function<bool(std::span<const Vertex>)>& visit) const;

  std::uint64_t count() const;

 private:
  struct Step {
    Vertex vertex;                 // pattern vertex placed at this depth
    std::vector<Vertex> placed;    // its pattern neighbors placed earlier
  };

  const Graph& pattern_;
  const Graph& host_;
  std::vector<Step> order_;
};

/// An unlabeled copy: the host vertex set and host edge set it occupies.
struct Copy {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  auto operator<=>(const Copy&) const = default;
};

struct CopyEnumeration {
  Graph pattern;
  Graph host;
  std::vector<Copy> copies;  // sorted, pairwise distinct
};

std::uint64_t count_injections(const Graph& host, const Graph& pattern);
std::uint64_t automorphism_count(const Graph& h);

/// Number of subgraphs of `host` isomorphic to `pattern`
/// (injections divided by |Aut(pattern)|).
std::uint64_t count_copies(const Graph& host, const Graph& pattern);
CopyEnumeration enumerate_copies(const Graph& host, const Graph& pattern);

/// Specialized DFS counters: copies of the path / cycle on r vertices.
std::uint64_t count_paths(const Graph& host, std::size_t r);
std::uint64_t count_cycles(const Graph& host, std::size_t r);

/// Calls `visit(perm)` for every automorphism. Practical up to ~12 vertices
/// for highly symmetric graphs.
void for_each_automorphism(const Graph& h,
                           const std::function<bool(std::span<const Vertex>)>& visit);

/// Partition of edge indices into orbits under Aut(h); each orbit sorted,
/// orbits ordered by smallest member.
std::vector<std::vector<std::size_t>> edge_orbits(const Graph& h);
bool is_edge_transitive(const Graph& h);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Canonical labeling by minimizing the upper-triangle adjacency bitstring
/// over degree-respecting orderings. Exponential; intended for n <= 8.
Graph canonical_form(const Graph& g);

/// If `g` is P_r, C_r or K_r (without isolated vertices), returns r; else 0.
std::size_t recognize_path(const Graph& g);
std::size_t recognize_cycle(const Graph& g);
std::size_t recognize_complete(const Graph& g);

}  // namespace planex
