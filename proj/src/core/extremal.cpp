#include "core/extremal.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "core/certify.hpp"
#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/gcl.hpp"
#include "core/graph_io.hpp"
#include "core/planarity.hpp"

namespace planex {
namespace {

std::size_t parse_count(std::string_view digits, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  require(ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty(),
          ErrorKind::Parse, "bad number in target '" + std::string(context) + "'");
  return value;
}

Target blowup_target(const Graph& h, unsigned k, std::string name) {
  require(k >= 1, ErrorKind::InvalidArgument, "blow-up target needs k >= 1");
  require(h.edge_count() >= 1 && !h.has_isolated_vertices(), ErrorKind::InvalidArgument,
          "blow-up base must have edges and no isolated vertices");
  Target t;
  t.kind = Target::Kind::Blowup;
  t.base = h;
  t.k = k;
  t.m = h.edge_count();
  t.graph = edge_blowup(h, k);
  t.name = std::move(name);
  return t;
}

// Ordered tuples (v_1..v_t) of distinct base vertices with consecutive
// pairs adjacent; if `closed`, v_t must also be adjacent to v_1.
template <class Visit>
void for_each_walk(const Graph& base, std::size_t t, bool closed, Visit visit) {
  const std::size_t n = base.vertex_count();
  std::vector<Vertex> tuple(t);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == t) {
      if (!closed || base.adjacent(tuple[t - 1], tuple[0])) visit(tuple);
      return;
    }
    const std::span<const Vertex> next = base.neighbors(tuple[depth - 1]);
    for (Vertex w : next) {
      if (used[w]) continue;
      used[w] = 1;
      tuple[depth] = w;
      self(self, depth + 1);
      used[w] = 0;
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    used[v] = 1;
    tuple[0] = v;
    extend(extend, 1);
    used[v] = 0;
  }
}

BigInt size_of(const Graph& base, const std::vector<std::size_t>& sizes, Vertex a, Vertex b) {
  const std::size_t i = base.edge_index(a, b);
  return i < sizes.size() ? BigInt(sizes[i]) : BigInt(0);
}

Rational power(std::size_t n, std::size_t e) { return Rational(ipow(BigInt(n), static_cast<unsigned>(e))); }

}  // namespace

Target parse_target(std::string_view text) {
  require(!text.empty(), ErrorKind::Parse, "empty target");
  if (text.starts_with("blowup(") && text.back() == ')') {
    const std::string_view inner = text.substr(7, text.size() - 8);
    const auto comma = inner.rfind(',');
    require(comma != std::string_view::npos, ErrorKind::Parse, "target needs blowup(<graph>,<k>)");
    const Graph h = parse_graph_descriptor(inner.substr(0, comma));
    return blowup_target(h, static_cast<unsigned>(parse_count(inner.substr(comma + 1), text)),
                         std::string(text));
  }
  if (text.starts_with("K2,")) {
    return blowup_target(Graph::complete(2), static_cast<unsigned>(parse_count(text.substr(3), text)),
                         std::string(text));
  }
  Target t;
  t.name = std::string(text);
  if (text.front() == 'P') {
    const std::size_t r = parse_count(text.substr(1), text);
    require(r >= 3 && r % 2 == 1, ErrorKind::Unsupported,
            "path targets must have an odd number of vertices, at least 3");
    t.kind = Target::Kind::OddPath;
    t.m = (r - 1) / 2;
    t.graph = Graph::path(r);
    return t;
  }
  if (text.front() == 'C') {
    const std::size_t r = parse_count(text.substr(1), text);
    require(r >= 4 && r % 2 == 0, ErrorKind::Unsupported,
            "cycle targets must have an even number of vertices, at least 4");
    t.kind = Target::Kind::EvenCycle;
    t.m = r / 2;
    t.graph = Graph::cycle(r);
    return t;
  }
  fail(ErrorKind::Unsupported, "unsupported target '" + std::string(text) + "'");
}

ConstructionSpec uniform_construction(const Graph& base, std::size_t n) {
  require(base.edge_count() > 0, ErrorKind::InvalidArgument, "construction base needs an edge");
  require(n >= base.vertex_count(), ErrorKind::InvalidArgument,
          "vertex budget " + std::to_string(n) + " is below the base size " +
              std::to_string(base.vertex_count()));
  const std::size_t part = (n - base.vertex_count()) / base.edge_count();
  return ConstructionSpec{base, std::vector<std::size_t>(base.edge_count(), part), n, false};
}

ConstructionSpec mass_construction(const FloatMass& mu, std::size_t n) {
  const Graph support = support_graph(mu);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < support.vertex_count(); ++v)
    if (support.degree(v) > 0) keep.push_back(v);
  const Graph base = support.induced(keep);
  std::vector<std::size_t> sizes;
  for (const Edge& e : base.edges()) {
    const double w = mu.weight(keep[e.u], keep[e.v]);
    sizes.push_back(static_cast<std::size_t>(std::floor(static_cast<double>(n) * w)));
  }
  return ConstructionSpec{base, std::move(sizes), n, true};
}

std::size_t construction_vertices(const ConstructionSpec& spec) {
  std::size_t total = spec.base.vertex_count();
  for (std::size_t s : spec.part_sizes) total += s;
  return total;
}

Graph build_lower_bound_graph(const ConstructionSpec& spec) {
  require(spec.part_sizes.size() == spec.base.edge_count(), ErrorKind::InvalidArgument,
          "construction needs one part size per base edge");
  if (!spec.mass_mode)
    require(construction_vertices(spec) <= spec.n, ErrorKind::InvalidArgument,
            "construction exceeds its vertex budget");
  Graph g = edge_blowup(spec.base, spec.part_sizes);
  require(gcl_membership(g, Rational(2)).member, ErrorKind::Precondition,
          "construction is not in the class for C = 2");
  return g;
}

UpperBound upper_bound_value(const Target& target, std::size_t n) {
  const std::size_t m = target.m;
  switch (target.kind) {
    case Target::Kind::OddPath:
      if (m == 2) return {power(n, 3), "n^3"};
      if (m == 3) return {Rational(4, 27) * power(n, 4), "(4/27) n^4"};
      require(m >= 4, ErrorKind::Unsupported, "no leading term for " + target.name);
      return {power(n, m + 1) / Rational(2 * factorial(static_cast<unsigned>(m - 1))),
              "n^" + std::to_string(m + 1) + " / (2 (" + std::to_string(m - 1) + ")!)"};
    case Target::Kind::EvenCycle:
      if (m == 2) return {power(n, 2) / 2, "n^2 / 2"};
      if (m == 3) return {power(n, 3) / 27, "(n/3)^3"};
      if (m == 4) return {power(n, 4) / 256, "(n/4)^4"};
      return {power(n, m) / Rational(factorial(static_cast<unsigned>(m))),
              "n^" + std::to_string(m) + " / " + std::to_string(m) + "!"};
    case Target::Kind::Blowup:
      break;
  }

  const Graph& h = target.base;
  const unsigned k = target.k;
  const std::size_t km = k * m;
  const std::size_t delta = h.min_degree();
  const std::string ks = std::to_string(k);
  const Rational kfact(factorial(k));
  if (recognize_complete(h) == 3)
    return {power(n, 3 * k) / (ipow(kfact, 3) * power(3, 3 * k)),
            "(1/(" + ks + "!)^3) (n/3)^" + std::to_string(3 * k)};
  if (recognize_complete(h) == 4)
    return {power(n, 6 * k) / (ipow(kfact, 6) * power(6, 6 * k)),
            "(1/(" + ks + "!)^6) (n/6)^" + std::to_string(6 * k)};
  if (recognize_complete(h) == 2) {
    require(k >= 9, ErrorKind::Unsupported, "K_{2,k} has a proven leading term only for k >= 9");
    return {power(n, k) / kfact, "n^" + ks + " / " + ks + "!"};
  }
  if (h.vertex_count() <= 10)
    require(is_planar_small(h), ErrorKind::Unsupported, "blow-up base must be planar");
  const bool large = largek_applies(m, k);
  if ((delta >= 2 && large) || (delta == 1 && k >= 9 && large))
    return {power(n, km) / (ipow(kfact, static_cast<unsigned>(m)) * power(m, km)),
            "(1/(" + ks + "!)^" + std::to_string(m) + ") (n/" + std::to_string(m) + ")^" +
                std::to_string(km)};
  if (k * (delta - 1) >= 2 || (delta == 1 && k >= 9))
    return {power(n, km) / Rational(factorial(static_cast<unsigned>(km))),
            "n^" + std::to_string(km) + " / (" + std::to_string(km) + ")!"};
  fail(ErrorKind::Unsupported, "no proven leading term for " + target.name);
}

BigInt structural_odd_path_count(const Graph& base, const std::vector<std::size_t>& sizes,
                                 std::size_t m) {
  require(m >= 1, ErrorKind::InvalidArgument, "odd paths need m >= 1");
  const std::size_t n = base.vertex_count();
  std::vector<BigInt> deg(n, 0);  // degree of an original vertex in the blow-up
  for (std::size_t i = 0; i < base.edge_count(); ++i) {
    deg[base.edges()[i].u] += sizes[i];
    deg[base.edges()[i].v] += sizes[i];
  }

  // Originals at the even positions: part vertices at both ends and between
  // consecutive originals.
  BigInt even = 0;
  if (m == 1) {
    for (Vertex v = 0; v < n; ++v) even += deg[v] * (deg[v] - 1);
  } else {
    for_each_walk(base, m, false, [&](const std::vector<Vertex>& v) {
      BigInt interior = 1;
      for (std::size_t i = 0; i + 1 < m; ++i) interior *= size_of(base, sizes, v[i], v[i + 1]);
      if (interior == 0) return;
      const Vertex first = v.front(), last = v.back();
      // s = part vertices adjacent to both ends still available for the ends.
      const BigInt s = m == 2 ? size_of(base, sizes, first, last) - 1 : size_of(base, sizes, first, last);
      const BigInt ends = (deg[first] - 1 - s) * (deg[last] - 1) + s * (deg[last] - 2);
      even += interior * ends;
    });
  }

  // Originals at the odd positions, part vertices strictly between them.
  BigInt odd = 0;
  for_each_walk(base, m + 1, false, [&](const std::vector<Vertex>& v) {
    BigInt interior = 1;
    for (std::size_t i = 0; i < m; ++i) interior *= size_of(base, sizes, v[i], v[i + 1]);
    odd += interior;
  });
  return (even + odd) / 2;
}

BigInt structural_even_cycle_count(const Graph& base, const std::vector<std::size_t>& sizes,
                                   std::size_t m) {
  require(m >= 2, ErrorKind::InvalidArgument, "even cycles need m >= 2");
  BigInt total = 0;
  if (m == 2) {
    for (std::size_t c : sizes) total += binomial(static_cast<unsigned>(c), 2);
    return total;
  }
  for_each_walk(base, m, true, [&](const std::vector<Vertex>& v) {
    BigInt product = 1;
    for (std::size_t i = 0; i < m; ++i) product *= size_of(base, sizes, v[i], v[(i + 1) % m]);
    total += product;
  });
  return total / (2 * m);
}

BigInt blowup_closed_form(const Graph& base, const std::vector<std::size_t>& sizes, const Graph& h,
                          unsigned k) {
  BigInt total = 0;
  if (h.vertex_count() > base.vertex_count()) return total;
  for (const Copy& c : enumerate_copies(base, h).copies) {
    BigInt product = 1;
    for (const Edge& e : c.edges)
      product *= binomial(static_cast<unsigned>(sizes[base.edge_index(e.u, e.v)]), k);
    total += product;
  }
  return total;
}

LowerBoundCount lower_bound_count(const ConstructionSpec& spec, const Target& target) {
  const Graph g = build_lower_bound_graph(spec);
  LowerBoundCount out;
  out.vertices = g.vertex_count();
  switch (target.kind) {
    case Target::Kind::OddPath:
      out.count = count_paths(g, 2 * target.m + 1);
      out.second = structural_odd_path_count(spec.base, spec.part_sizes, target.m);
      out.second_method = "structural";
      break;
    case Target::Kind::EvenCycle:
      out.count = count_cycles(g, 2 * target.m);
      out.second = structural_even_cycle_count(spec.base, spec.part_sizes, target.m);
      out.second_method = "structural";
      break;
    case Target::Kind::Blowup:
      out.count = count_copies(g, target.graph);
      out.second = blowup_closed_form(spec.base, spec.part_sizes, target.base, target.k);
      out.second_method = "closed-form";
      break;
  }
  out.agree = out.second == out.count;
  return out;
}

Graph default_base(const Target& target) {
  switch (target.kind) {
    case Target::Kind::OddPath:
      require(target.m >= 2, ErrorKind::Unsupported, "no construction for " + target.name);
      return target.m >= 3 ? Graph::cycle(target.m) : Graph::complete(2);
    case Target::Kind::EvenCycle:
      return target.m >= 3 ? Graph::cycle(target.m) : Graph::complete(2);
    case Target::Kind::Blowup:
      return target.base;
  }
  return Graph();
}

BoundTable bound_table(const std::vector<Target>& targets, const std::vector<std::size_t>& n_values) {
  BoundTable table;
  for (const Target& target : targets) {
    const Graph base = default_base(target);
    for (std::size_t n : n_values) {
      const ConstructionSpec spec = uniform_construction(base, n);
      const LowerBoundCount lower = lower_bound_count(spec, target);
      const UpperBound upper = upper_bound_value(target, n);
      BoundRow row;
      row.target = target.name;
      row.n = n;
      row.base = to_graph6(base);
      row.part_size = spec.part_sizes.empty() ? 0 : spec.part_sizes.front();
      row.vertices = lower.vertices;
      row.lower = lower.count;
      row.second = lower.second.str();
      row.second_method = lower.second_method;
      row.agree = lower.agree;
      row.upper = to_double(upper.value);
      row.upper_formula = upper.formula;
      row.ratio = to_double(Rational(BigInt(lower.count)) / upper.value);
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::string render_text(const BoundTable& table) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "target" << std::right << std::setw(6) << "n" << std::setw(6)
      << "l" << std::setw(14) << "lower" << std::setw(16) << "upper" << std::setw(10) << "ratio"
      << "  agree  upper term\n";
  for (const BoundRow& r : table.rows) {
    out << std::left << std::setw(16) << r.target << std::right << std::setw(6) << r.n << std::setw(6)
        << r.part_size << std::setw(14) << r.lower << std::setw(16) << std::setprecision(10) << r.upper
        << std::setw(10) << std::fixed << std::setprecision(6) << r.ratio << std::defaultfloat << "  "
        << std::setw(5) << (r.agree ? "yes" : "NO") << "  " << r.upper_formula << "\n";
  }
  return out.str();
}

}  // namespace planex
