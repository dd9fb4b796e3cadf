#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"

namespace planex {

struct CodegreeBoundReport {
  std::vector<Vertex> heavy;  // vertices with deg >= eps * n
  double heavy_bound = 0;     // 2C / eps
  std::uint64_t codegree_sum = 0;
  double codegree_bound = 0;  // n + 4 (C / eps)^4
  bool heavy_ok = false;
  bool codegree_ok = false;
  bool holds() const { return heavy_ok && codegree_ok; }
};

/// Throws Error(Precondition) when g is not in the class for C.
CodegreeBoundReport check_codegree_bound(const Graph& g, const Rational& c, double eps);

struct EasyUpperReport {
  BigInt lhs;            // sum over copies of H in K_{V(G)} of prod codeg^k
  BigInt power;          // (2|E(G)|)^{km}
  std::uint64_t automorphisms = 0;
  bool holds = false;    // lhs * |Aut H| <= power
};

/// Requires k * delta(H) >= 2 and no isolated vertices in H.
EasyUpperReport verify_easyupper(const Graph& g, const Graph& h, unsigned k);

struct OddPathReport {
  std::uint64_t paths = 0;  // copies of P_{2m}
  BigInt power;             // (2|E(G)|)^m
  bool holds = false;       // 2 * paths <= power
};

OddPathReport verify_oddpath_bound(const Graph& g, unsigned m);

}  // namespace planex
