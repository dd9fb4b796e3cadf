#include "core/counting_checks.hpp"

#include <cmath>

#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/gcl.hpp"

namespace planex {

CodegreeBoundReport check_codegree_bound(const Graph& g, const Rational& c, double eps) {
  require(eps > 0, ErrorKind::InvalidArgument, "codegree bound: eps must be positive");
  require(c > 0, ErrorKind::InvalidArgument, "codegree bound: C must be positive");
  require(gcl_membership(g, c).member, ErrorKind::Precondition,
          "codegree bound: graph is not in the class for C=" + to_string(c));

  const std::size_t n = g.vertex_count();
  const double ratio = to_double(c) / eps;
  CodegreeBoundReport report;
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<double>(g.degree(v)) >= eps * static_cast<double>(n)) report.heavy.push_back(v);
  for (std::size_t i = 0; i < report.heavy.size(); ++i)
    for (std::size_t j = i + 1; j < report.heavy.size(); ++j)
      report.codegree_sum += g.codegree(report.heavy[i], report.heavy[j]);

  report.heavy_bound = 2 * ratio;
  report.codegree_bound = static_cast<double>(n) + 4 * std::pow(ratio, 4);
  report.heavy_ok = static_cast<double>(report.heavy.size()) <= report.heavy_bound;
  report.codegree_ok = static_cast<double>(report.codegree_sum) <= report.codegree_bound;
  return report;
}

EasyUpperReport verify_easyupper(const Graph& g, const Graph& h, unsigned k) {
  require(k >= 1, ErrorKind::InvalidArgument, "easyupper: k must be positive");
  require(!h.has_isolated_vertices(), ErrorKind::Precondition,
          "easyupper: pattern has an isolated vertex");
  require(k * h.min_degree() >= 2, ErrorKind::Precondition, "easyupper: needs k * delta(H) >= 2");

  EasyUpperReport report;
  report.automorphisms = automorphism_count(h);
  const auto km = static_cast<unsigned>(k * h.edge_count());
  report.power = ipow(BigInt(2 * g.edge_count()), km);

  // Pairs with zero codegree contribute nothing, so only copies inside the
  // codegree graph matter.
  const Graph support = g.codegree_graph();
  if (h.vertex_count() <= g.vertex_count()) {
    EmbeddingSearch(h, support).for_each([&](std::span<const Vertex> image) {
      BigInt term = 1;
      for (const Edge& e : h.edges()) term *= g.codegree(image[e.u], image[e.v]);
      report.lhs += ipow(term, k);
      return true;
    });
  }
  // Each copy was visited once per automorphism.
  report.lhs /= report.automorphisms;
  report.holds = report.lhs * report.automorphisms <= report.power;
  return report;
}

OddPathReport verify_oddpath_bound(const Graph& g, unsigned m) {
  require(m >= 1, ErrorKind::InvalidArgument, "oddpath: m must be positive");
  OddPathReport report;
  report.paths = count_paths(g, 2 * m);
  report.power = ipow(BigInt(2 * g.edge_count()), m);
  report.holds = BigInt(2) * report.paths <= report.power;
  return report;
}

}  // namespace planex
