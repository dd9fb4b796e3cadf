#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"
#include "core/mass.hpp"
#include "core/rational.hpp"

namespace planex {

/// A pattern whose planar extremal count has a known leading term.
struct Target {
  enum class Kind { OddPath, EvenCycle, Blowup };

  Kind kind = Kind::OddPath;
  std::size_t m = 0;   // P_{2m+1}, C_{2m}, or |E(H)| for blow-ups
  Graph base;          // H for blow-ups
  unsigned k = 1;
  Graph graph;         // the pattern itself
  std::string name;
};

/// Accepts P<odd>, C<even>, K2,<k> and blowup(<graph descriptor>,<k>).
Target parse_target(std::string_view text);

struct ConstructionSpec {
  Graph base;
  std::vector<std::size_t> part_sizes;  // one per base edge, in base.edges() order
  std::size_t n = 0;                    // vertex budget
  bool mass_mode = false;
};

/// Every part gets l = floor((n - |V(base)|) / |E(base)|) vertices.
ConstructionSpec uniform_construction(const Graph& base, std::size_t n);
/// Base is the support of mu (vertices of positive mass), part sizes floor(n mu(e)).
/// The built graph can exceed n vertices; the overshoot is reported, not trimmed.
ConstructionSpec mass_construction(const FloatMass& mu, std::size_t n);

std::size_t construction_vertices(const ConstructionSpec& spec);

/// Per-edge blow-up of the base. Throws Error(Precondition) if the result is
/// not in the class for C = 2.
Graph build_lower_bound_graph(const ConstructionSpec& spec);

struct UpperBound {
  Rational value;
  std::string formula;
};

/// Leading term of the planar extremal count. Throws Error(Unsupported) for
/// targets without a proven leading term.
UpperBound upper_bound_value(const Target& target, std::size_t n);

/// Second counters that use the blow-up structure instead of a search.
/// Paths on 2m+1 vertices and cycles on 2m vertices in the per-edge blow-up.
BigInt structural_odd_path_count(const Graph& base, const std::vector<std::size_t>& sizes, std::size_t m);
BigInt structural_even_cycle_count(const Graph& base, const std::vector<std::size_t>& sizes, std::size_t m);
/// Sum over copies H' of H in base of prod_{e in H'} binom(c_e, k).
BigInt blowup_closed_form(const Graph& base, const std::vector<std::size_t>& sizes, const Graph& h,
                          unsigned k);

struct LowerBoundCount {
  std::uint64_t count = 0;          // search count in the built graph
  BigInt second;                    // structural counter or closed form
  std::string second_method;
  bool agree = false;
  std::size_t vertices = 0;
};

LowerBoundCount lower_bound_count(const ConstructionSpec& spec, const Target& target);

/// Base graph of the standard construction for a target.
Graph default_base(const Target& target);

struct BoundRow {
  std::string target;
  std::size_t n = 0;
  std::string base;          // graph6
  std::size_t part_size = 0;
  std::size_t vertices = 0;
  std::uint64_t lower = 0;
  std::string second;        // decimal
  std::string second_method;
  bool agree = false;
  double upper = 0;
  std::string upper_formula;
  double ratio = 0;
};

struct BoundTable {
  std::vector<BoundRow> rows;
};

BoundTable bound_table(const std::vector<Target>& targets, const std::vector<std::size_t>& n_values);
std::string render_text(const BoundTable& table);

}  // namespace planex
