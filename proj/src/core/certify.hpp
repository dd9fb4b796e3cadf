#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/mass.hpp"
#include "core/objective.hpp"
#include "core/rational.hpp"

namespace planex {

template <class T>
struct KktReport {
  T lambda;                 // sum_e mu(e) g(e)
  T residual;               // max |g - lambda| on the support, max (g - lambda)^+ off it
  std::vector<T> gradient;
};

template <class T>
KktReport<T> kkt_residual(const EdgeMass<T>& mu, const ObjectiveSpec& spec);

struct RegularityReport {
  double value = 0;                   // optb(mu; H, k)
  double max_edge_violation = 0;      // |mu(e) m optb - sum_{H' containing e} mu(H')^k|
  double max_vertex_violation = 0;    // |mbar(x) m optb - sum deg_{H'}(x) mu(H')^k|
  bool exact_zero = false;            // rational mode: both families hold exactly
};

template <class T>
RegularityReport check_regularity(const EdgeMass<T>& mu, const Graph& h, unsigned k);

struct MassBoundsReport {
  double max_edge_violation = 0;    // max over supp of (1 - m mu(e)) - (1 - mu(e))^{km}, clipped at 0
  double max_vertex_violation = 0;  // same with (m / delta) mbar(x)
  bool holds = false;
};

template <class T>
MassBoundsReport check_mass_bounds(const EdgeMass<T>& mu, const Graph& h, unsigned k,
                                   double tolerance = 1e-12);

struct SupportBound {
  std::size_t bound = 0;        // ceil(2km / (k delta - 1)), at least floor(2m / delta)
  std::size_t strict_cap = 0;   // largest ground size strictly below 2km / (k delta - 1)
};

/// Throws Error(Precondition) when k * delta(H) < 2.
SupportBound support_bound(const Graph& h, unsigned k);

double largek_threshold(std::size_t m);
/// Exact form of k >= largek_threshold(m): (m+1)^{km-1} >= m^{km}.
bool largek_applies(std::size_t m, unsigned k);

struct CertifiedValue {
  std::optional<Rational> exact;   // closed form when one is proven
  Rational lower;
  Rational upper;
  bool achieved = true;            // false for suprema that are never attained
  std::string basis;
  std::optional<Rational> conjectured;
};

CertifiedValue certified_value(const ObjectiveSpec& spec);

/// (k!)^m / (km)!
Rational optb_envelope(std::size_t m, unsigned k);
/// 1 / (m-1)! for m >= 3, 2 for m = 2.
Rational optp_envelope(std::size_t m);

struct EdgeTransReport {
  bool edge_transitive = false;
  std::size_t m = 0;             // edges of H minus one edge
  Rational formula;              // (m+1)^{1-km}
  Rational direct;               // optb(uniform on E(H); H^-, k)
  Rational baseline;             // m^{-km}
  double ratio = 0;              // formula / baseline
  double log_ratio = 0;
};

/// `h` is the edge-transitive graph; H^- is h with edge 0 removed.
EdgeTransReport edgetrans_lower(const Graph& h, unsigned k);

}  // namespace planex
