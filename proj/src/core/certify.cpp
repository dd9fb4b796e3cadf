#include "core/certify.hpp"

#include <algorithm>
#include <cmath>

#include "core/copies.hpp"
#include "core/error.hpp"

namespace planex {
namespace {

template <class T>
double as_double(const T& x) {
  if constexpr (std::is_same_v<T, double>)
    return x;
  else
    return to_double(x);
}

template <class T>
T absolute(const T& x) {
  T out = x;
  if (out < 0) out = -out;
  return out;
}

bool is_star(const Graph& h) {
  const std::size_t n = h.vertex_count();
  return n >= 3 && h.edge_count() == n - 1 && h.max_degree() == n - 1 && h.min_degree() == 1;
}

bool is_matching(const Graph& h) {
  return h.edge_count() >= 2 && h.max_degree() == 1 && h.min_degree() == 1;
}

Rational inverse_power(std::size_t base, std::size_t exponent) {
  return Rational(BigInt(1), ipow(BigInt(base), static_cast<unsigned>(exponent)));
}

}  // namespace

template <class T>
KktReport<T> kkt_residual(const EdgeMass<T>& mu, const ObjectiveSpec& spec) {
  const CompiledObjective<T> objective(spec, mu.ground_size());
  KktReport<T> report{T(0), T(0), {}};
  objective.value_and_gradient(mu.weights(), report.gradient);
  for (std::size_t i = 0; i < report.gradient.size(); ++i)
    report.lambda += mu.weight(i) * report.gradient[i];
  for (std::size_t i = 0; i < report.gradient.size(); ++i) {
    const T gap = report.gradient[i] - report.lambda;
    const T violation = is_positive(mu.weight(i)) ? absolute<T>(gap) : (gap > 0 ? gap : T(0));
    if (violation > report.residual) report.residual = violation;
  }
  return report;
}

template <class T>
RegularityReport check_regularity(const EdgeMass<T>& mu, const Graph& h, unsigned k) {
  require(!h.has_isolated_vertices() && h.edge_count() > 0, ErrorKind::InvalidArgument,
          "regularity: pattern must have edges and no isolated vertices");
  const std::size_t n = mu.ground_size();
  const std::size_t m = h.edge_count();
  std::vector<T> by_pair(pair_count(n), T(0));
  std::vector<T> by_vertex(n, T(0));
  T value(0);
  if (h.vertex_count() <= n) {
    const CopyEnumeration copies = enumerate_copies(support_graph(mu), h);
    std::vector<std::size_t> degree(n, 0);
    for (const Copy& c : copies.copies) {
      T product(1);
      for (const Edge& e : c.edges) product *= mu.weight(e.u, e.v);
      const T term = ipow(product, k);
      value += term;
      for (const Edge& e : c.edges) {
        by_pair[pair_index(n, e.u, e.v)] += term;
        ++degree[e.u];
        ++degree[e.v];
      }
      for (Vertex x : c.vertices) {
        by_vertex[x] += T(static_cast<long long>(degree[x])) * term;
        degree[x] = 0;
      }
    }
  }

  RegularityReport report;
  report.value = as_double(value);
  const T scale = T(static_cast<long long>(m)) * value;
  bool exact = true;
  for (std::size_t i = 0; i < by_pair.size(); ++i) {
    const T gap = absolute<T>(mu.weight(i) * scale - by_pair[i]);
    exact = exact && gap == 0;
    report.max_edge_violation = std::max(report.max_edge_violation, as_double(gap));
  }
  const std::vector<T> mbar = vertex_masses(mu);
  for (std::size_t x = 0; x < n; ++x) {
    const T gap = absolute<T>(mbar[x] * scale - by_vertex[x]);
    exact = exact && gap == 0;
    report.max_vertex_violation = std::max(report.max_vertex_violation, as_double(gap));
  }
  report.exact_zero = exact;
  return report;
}

template <class T>
MassBoundsReport check_mass_bounds(const EdgeMass<T>& mu, const Graph& h, unsigned k,
                                   double tolerance) {
  require(!h.has_isolated_vertices() && h.edge_count() > 0, ErrorKind::InvalidArgument,
          "mass bounds: pattern must have edges and no isolated vertices");
  const auto m = static_cast<long long>(h.edge_count());
  const auto delta = static_cast<long long>(h.min_degree());
  const auto km = static_cast<unsigned>(k * h.edge_count());
  MassBoundsReport report;
  for (const T& w : mu.weights()) {
    if (!is_positive(w)) continue;
    const T gap = (T(1) - T(m) * w) - ipow<T>(T(1) - w, km);
    if (gap > 0) report.max_edge_violation = std::max(report.max_edge_violation, as_double(gap));
  }
  for (const T& mbar : vertex_masses(mu)) {
    if (!is_positive(mbar)) continue;
    const T gap = (T(1) - T(m) / T(delta) * mbar) - ipow<T>(T(1) - mbar, km);
    if (gap > 0) report.max_vertex_violation = std::max(report.max_vertex_violation, as_double(gap));
  }
  report.holds = report.max_edge_violation <= tolerance && report.max_vertex_violation <= tolerance;
  return report;
}

#define PLANEX_INSTANTIATE(T)                                                              \
  template KktReport<T> kkt_residual(const EdgeMass<T>&, const ObjectiveSpec&);            \
  template RegularityReport check_regularity(const EdgeMass<T>&, const Graph&, unsigned);  \
  template MassBoundsReport check_mass_bounds(const EdgeMass<T>&, const Graph&, unsigned, double);
PLANEX_INSTANTIATE(double)
PLANEX_INSTANTIATE(Rational)
#undef PLANEX_INSTANTIATE

SupportBound support_bound(const Graph& h, unsigned k) {
  require(!h.has_isolated_vertices() && h.edge_count() > 0, ErrorKind::InvalidArgument,
          "support bound: pattern must have edges and no isolated vertices");
  const std::size_t delta = h.min_degree();
  require(k * delta >= 2, ErrorKind::Precondition,
          "support bound needs k * delta(H) >= 2; no proven cap otherwise");
  const std::size_t m = h.edge_count();
  const std::size_t num = 2 * k * m;
  const std::size_t den = k * delta - 1;
  const std::size_t floor_vertex = 2 * m / delta;
  SupportBound out;
  out.bound = std::max((num + den - 1) / den, floor_vertex);
  out.strict_cap = std::max((num - 1) / den, floor_vertex);
  return out;
}

double largek_threshold(std::size_t m) {
  require(m >= 1, ErrorKind::InvalidArgument, "largek threshold needs m >= 1");
  const double md = static_cast<double>(m);
  return std::log(md + 1) / (md * std::log1p(1 / md));
}

bool largek_applies(std::size_t m, unsigned k) {
  require(m >= 1 && k >= 1, ErrorKind::InvalidArgument, "largek needs m, k >= 1");
  const auto km = static_cast<unsigned>(k * m);
  return ipow(BigInt(m + 1), km - 1) >= ipow(BigInt(m), km);
}

Rational optb_envelope(std::size_t m, unsigned k) {
  return Rational(ipow(factorial(k), static_cast<unsigned>(m)),
                  factorial(static_cast<unsigned>(k * m)));
}

Rational optp_envelope(std::size_t m) {
  require(m >= 2, ErrorKind::InvalidArgument, "optp needs m >= 2");
  if (m == 2) return Rational(2);
  return Rational(BigInt(1), factorial(static_cast<unsigned>(m - 1)));
}

CertifiedValue certified_value(const ObjectiveSpec& spec) {
  CertifiedValue out;
  auto exact = [&](Rational value, std::string why) {
    out.exact = value;
    out.lower = value;
    out.upper = value;
    out.basis = std::move(why);
    return out;
  };

  if (spec.kind == ObjectiveSpec::Kind::Path) {
    const std::size_t m = spec.m;
    if (m == 2) return exact(Rational(2), "closed form: optp(2) = 2, attained by a single pair");
    if (m == 3) return exact(Rational(8, 27), "closed form: optp(3) = 8/27, attained by a triangle");
    const Rational cycle = Rational(8) * inverse_power(m, m);
    out.lower = cycle;
    out.upper = optp_envelope(m);
    out.conjectured = cycle;
    out.basis = "bounds only: uniform on E(C_m) gives 8 m^-m (conjectured optimal), upper 1/(m-1)!";
    return out;
  }

  const Graph& h = spec.pattern;
  const std::size_t m = h.edge_count();
  const unsigned k = spec.k;
  const std::size_t km = k * m;
  const std::size_t t = recognize_complete(h);
  if (t == 2) return exact(Rational(1), "closed form: optb(K_2, k) = 1");
  if (t >= 3) return exact(inverse_power(m, km), "closed form: uniform on E(K_t)");
  if (recognize_cycle(h) == 4) return exact(inverse_power(4, 4 * k), "closed form: uniform on E(C_4)");
  if (largek_applies(m, k))
    return exact(inverse_power(m, km), "large-k regime: uniform on E(H) is optimal");
  if (k == 1 && (is_star(h) || is_matching(h))) {
    const Rational sup(BigInt(1), factorial(static_cast<unsigned>(m)));
    out.lower = sup;
    out.upper = sup;
    out.exact = sup;
    out.achieved = false;
    out.basis = "supremum 1/m! approached by spreading mass, never attained";
    return out;
  }

  out.lower = inverse_power(m, km);
  out.basis = "bounds only: lower from uniform on E(H)";
  // A non-edge whose addition makes H edge-transitive gives a better point.
  const std::size_t n = h.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (h.adjacent(a, b)) continue;
      std::vector<Edge> edges = h.edges();
      edges.push_back({a, b});
      if (!is_edge_transitive(Graph(n, edges))) continue;
      const Rational candidate = inverse_power(m + 1, km - 1);
      if (candidate > out.lower) {
        out.lower = candidate;
        out.basis = "bounds only: lower from uniform on an edge-transitive supergraph";
      }
    }
  out.upper = optb_envelope(m, k);
  return out;
}

EdgeTransReport edgetrans_lower(const Graph& h, unsigned k) {
  require(k >= 1, ErrorKind::InvalidArgument, "edgetrans: k must be positive");
  require(h.edge_count() >= 3, ErrorKind::InvalidArgument, "edgetrans: needs at least 3 edges");
  EdgeTransReport report;
  report.edge_transitive = is_edge_transitive(h);
  require(report.edge_transitive, ErrorKind::InvalidArgument, "edgetrans: graph is not edge-transitive");
  const Graph minus = h.without_edge(0);
  require(!minus.has_isolated_vertices(), ErrorKind::InvalidArgument,
          "edgetrans: removing an edge leaves an isolated vertex");
  const std::size_t m = minus.edge_count();
  const std::size_t km = k * m;
  report.m = m;
  report.formula = inverse_power(m + 1, km - 1);
  report.direct = eval_optb(ExactMass::uniform_on(h), minus, k);
  report.baseline = inverse_power(m, km);
  const double md = static_cast<double>(m);
  report.log_ratio = std::log(md + 1) + static_cast<double>(km) * std::log(md / (md + 1));
  report.ratio = std::exp(report.log_ratio);
  return report;
}

}  // namespace planex
