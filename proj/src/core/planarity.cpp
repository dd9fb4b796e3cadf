#include "core/planarity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "core/error.hpp"

namespace planex {
namespace {

using Masks = std::vector<std::uint16_t>;

std::size_t edge_total(const Masks& adj) {
  std::size_t twice = 0;
  for (auto row : adj) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool has_k5_subgraph(const Masks& adj) {
  const std::size_t n = adj.size();
  // Grow cliques in increasing vertex order.
  auto grow = [&](auto&& self, std::uint16_t candidates, int size) -> bool {
    if (size == 5) return true;
    if (std::popcount(candidates) + size < 5) return false;
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= static_cast<std::uint16_t>(candidates - 1);
      if (self(self, static_cast<std::uint16_t>(candidates & adj[v]), size + 1)) return true;
    }
    return false;
  };
  const auto all = static_cast<std::uint16_t>((1u << n) - 1);
  return grow(grow, all, 0);
}

bool has_k33_subgraph(const Masks& adj) {
  const std::size_t n = adj.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (std::popcount(static_cast<unsigned>(adj[a] & adj[b] & adj[c])) >= 3) return true;
  return false;
}

Masks contract(const Masks& adj, std::size_t a, std::size_t b) {
  // Merge b into a, then drop b and shift higher indices down.
  const std::size_t n = adj.size();
  Masks merged = adj;
  merged[a] = static_cast<std::uint16_t>((merged[a] | merged[b]) & ~(1u << a) & ~(1u << b));
  for (std::size_t v = 0; v < n; ++v)
    if (v != a && (merged[b] >> v & 1u)) merged[v] |= static_cast<std::uint16_t>(1u << a);
  Masks out;
  out.reserve(n - 1);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == b) continue;
    const unsigned row = merged[v] & ~(1u << b);
    const unsigned low = row & ((1u << b) - 1);
    const unsigned high = (row >> (b + 1)) << b;
    out.push_back(static_cast<std::uint16_t>(low | high));
  }
  return out;
}

class MinorSearch {
 public:
  bool nonplanar(const Masks& adj) {
    const std::size_t n = adj.size();
    const std::size_t m = edge_total(adj);
    if (n < 5 || m < 9) return false;
    if (n >= 3 && m > 3 * n - 6) return true;
    if (has_k5_subgraph(adj) || has_k33_subgraph(adj)) return true;
    if (!seen_.insert(adj).second) return false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if ((adj[a] >> b & 1u) && nonplanar(contract(adj, a, b))) return true;
    return false;
  }

 private:
  std::set<Masks> seen_;
};

}  // namespace

bool is_planar_small(const Graph& g) {
  const std::size_t n = g.vertex_count();
  require(n <= 10, ErrorKind::Unsupported, "is_planar_small: limited to 10 vertices");
  Masks adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    adj[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
  return !MinorSearch().nonplanar(adj);
}

}  // namespace planex
