#include "core/copies.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "core/error.hpp"

namespace planex {
namespace {

bool is_connected_ignoring_isolated(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Vertex start = 0;
  while (start < n && g.degree(start) == 0) ++start;
  if (start == n) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) > 0 && !seen[v]) return false;
  return true;
}

}  // namespace

EmbeddingSearch::EmbeddingSearch(const Graph& pattern, const Graph& host)
    : pattern_(pattern), host_(host) {
  const std::size_t n = pattern.vertex_count();
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> placed_neighbors(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    // Prefer the vertex with most placed neighbors, then highest degree.
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!found || placed_neighbors[v] > placed_neighbors[best] ||
          (placed_neighbors[v] == placed_neighbors[best] &&
           pattern.degree(v) > pattern.degree(best))) {
        best = v;
        found = true;
      }
    }
    Step s{best, {}};
    for (Vertex w : pattern.neighbors(best))
      if (placed[w]) s.placed.push_back(w);
    placed[best] = 1;
    for (Vertex w : pattern.neighbors(best)) ++placed_neighbors[w];
    order_.push_back(std::move(s));
  }
}

void EmbeddingSearch::for_each(
    const std::function<bool(std::span<const Vertex>)>& visit) const {
  const std::size_t n = pattern_.vertex_count();
  if (n > host_.vertex_count()) return;
  std::vector<Vertex> image(n, 0);
  std::vector<char> used(host_.vertex_count(), 0);
  std::vector<Vertex> all(host_.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});

  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order_.size()) return visit(image);
    const Step& step = order_[depth];
    const std::size_t need = pattern_.degree(step.vertex);
    std::span<const Vertex> candidates =
        step.placed.empty() ? std::span<const Vertex>(all) : host_.neighbors(image[step.placed[0]]);
    for (Vertex c : candidates) {
      if (used[c] || host_.degree(c) < need) continue;
      bool ok = true;
      for (std::size_t i = 1; i < step.placed.size() && ok; ++i)
        ok = host_.adjacent(c, image[step.placed[i]]);
      if (!ok) continue;
      image[step.vertex] = c;
      used[c] = 1;
      const bool keep_going = self(self, depth + 1);
      used[c] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  recurse(recurse, 0);
}

std::uint64_t EmbeddingSearch::count() const {
  std::uint64_t total = 0;
  for_each([&](std::span<const Vertex>) {
    ++total;
    return true;
  });
  return total;
}

std::uint64_t count_injections(const Graph& host, const Graph& pattern) {
  return EmbeddingSearch(pattern, host).count();
}

std::uint64_t automorphism_count(const Graph& h) { return count_injections(h, h); }

std::uint64_t count_copies(const Graph& host, const Graph& pattern) {
  require(pattern.vertex_count() >= 1, ErrorKind::InvalidArgument,
          "count_copies: pattern needs at least one vertex");
  if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
    return 0;
  const std::uint64_t injections = count_injections(host, pattern);
  if (injections == 0) return 0;
  return injections / automorphism_count(pattern);
}

CopyEnumeration enumerate_copies(const Graph& host, const Graph& pattern) {
  require(pattern.vertex_count() >= 1, ErrorKind::InvalidArgument,
          "enumerate_copies: pattern needs at least one vertex");
  std::set<Copy> seen;
  EmbeddingSearch(pattern, host).for_each([&](std::span<const Vertex> image) {
    Copy c;
    c.vertices.assign(image.begin(), image.end());
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edges.reserve(pattern.edge_count());
    for (const Edge& e : pattern.edges()) c.edges.push_back(make_edge(image[e.u], image[e.v]));
    std::sort(c.edges.begin(), c.edges.end());
    seen.insert(std::move(c));
    return true;
  });
  return CopyEnumeration{pattern, host, std::vector<Copy>(seen.begin(), seen.end())};
}

std::uint64_t count_paths(const Graph& host, std::size_t r) {
  const std::size_t n = host.vertex_count();
  if (r == 0) return 1;
  if (r == 1) return n;
  if (r == 2) return host.edge_count();
  std::vector<char> on_path(n, 0);
  std::uint64_t directed = 0;
  auto extend = [&](auto&& self, Vertex v, std::size_t length) -> void {
    if (length == r) {
      ++directed;
      return;
    }
    for (Vertex w : host.neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      self(self, w, length + 1);
      on_path[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    on_path[s] = 1;
    extend(extend, s, 1);
    on_path[s] = 0;
  }
  return directed / 2;
}

std::uint64_t count_cycles(const Graph& host, std::size_t r) {
  require(r >= 3, ErrorKind::InvalidArgument, "count_cycles: cycles need r >= 3");
  const std::size_t n = host.vertex_count();
  std::vector<char> on_path(n, 0);
  std::uint64_t directed = 0;
  // Each cycle is found from its smallest vertex, once per direction.
  for (Vertex s = 0; s < n; ++s) {
    auto extend = [&](auto&& self, Vertex v, std::size_t length) -> void {
      if (length == r) {
        if (host.adjacent(v, s)) ++directed;
        return;
      }
      for (Vertex w : host.neighbors(v)) {
        if (w <= s || on_path[w]) continue;
        on_path[w] = 1;
        self(self, w, length + 1);
        on_path[w] = 0;
      }
    };
    on_path[s] = 1;
    extend(extend, s, 1);
    on_path[s] = 0;
  }
  return directed / 2;
}

void for_each_automorphism(const Graph& h,
                           const std::function<bool(std::span<const Vertex>)>& visit) {
  EmbeddingSearch(h, h).for_each(visit);
}

std::vector<std::vector<std::size_t>> edge_orbits(const Graph& h) {
  const std::size_t m = h.edge_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for_each_automorphism(h, [&](std::span<const Vertex> perm) {
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = h.edges()[i];
      const std::size_t j = h.edge_index(perm[e.u], perm[e.v]);
      const std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    return true;
  });
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == m) {
      slot[root] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(i);
  }
  return orbits;
}

bool is_edge_transitive(const Graph& h) {
  return h.edge_count() > 0 && edge_orbits(h).size() == 1;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  bool found = false;
  EmbeddingSearch(a, b).for_each([&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

Graph canonical_form(const Graph& g) {
  const std::size_t n = g.vertex_count();
  require(n <= 11, ErrorKind::Unsupported, "canonical_form: limited to 11 vertices");
  // Positions are filled by degree class (descending), so only orderings that
  // respect degrees are tried.
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });

  std::vector<Vertex> order(n);
  std::vector<char> used(n, 0);
  std::vector<Vertex> best_order;
  std::uint64_t best_code = 0;
  bool have_best = false;

  auto encode = [&]() {
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    return code;
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      const std::uint64_t code = encode();
      if (!have_best || code > best_code) {
        best_code = code;
        best_order = order;
        have_best = true;
      }
      return;
    }
    const std::size_t want = g.degree(by_degree[pos]);
    for (Vertex v : by_degree) {
      if (used[v] || g.degree(v) != want) continue;
      used[v] = 1;
      order[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  recurse(recurse, 0);
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[best_order[i]] = static_cast<Vertex>(i);
  return g.relabeled(perm);
}

std::size_t recognize_path(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() + 1 != n || g.max_degree() > 2) return 0;
  if (n > 1 && g.has_isolated_vertices()) return 0;
  return is_connected_ignoring_isolated(g) ? n : 0;
}

std::size_t recognize_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || g.min_degree() != 2 || g.max_degree() != 2) return 0;
  return is_connected_ignoring_isolated(g) ? n : 0;
}

std::size_t recognize_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n * (n - 1) / 2) return 0;
  return n;
}

}  // namespace planex
