#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"
#include "core/rational.hpp"

namespace planex {

/// Pairs of an n-element ground set, indexed lexicographically:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
std::size_t pair_count(std::size_t ground);
std::size_t pair_index(std::size_t ground, Vertex a, Vertex b);
std::vector<Edge> all_pairs(std::size_t ground);

// Weights at or below this are treated as zero in floating point.
inline constexpr double kSupportThreshold = 1e-15;

template <class T>
bool is_positive(const T& w);

/// Probability mass on the unordered pairs of {0, ..., ground-1}.
template <class T>
class EdgeMass {
 public:
  EdgeMass() = default;
  /// `weights` is indexed by pair_index. Throws InvalidArgument on negative
  /// weights or a total that is not 1 (exactly for rationals, 1e-12 for doubles).
  EdgeMass(std::size_t ground, std::vector<T> weights);

  static EdgeMass from_pairs(std::size_t ground, const std::vector<std::pair<Edge, T>>& pairs);
  /// Uniform on the edges of g, ground set V(g).
  static EdgeMass uniform_on(const Graph& g);
  /// Uniform on the edges of g, embedded in a larger ground set.
  static EdgeMass uniform_on(const Graph& g, std::size_t ground);

  std::size_t ground_size() const noexcept { return ground_; }
  const std::vector<T>& weights() const noexcept { return weights_; }
  const T& weight(std::size_t index) const { return weights_[index]; }
  T weight(Vertex a, Vertex b) const;

 private:
  std::size_t ground_ = 0;
  std::vector<T> weights_;
};

using FloatMass = EdgeMass<double>;
using ExactMass = EdgeMass<Rational>;

FloatMass to_float(const ExactMass& mu);

template <class T>
T vertex_mass(const EdgeMass<T>& mu, Vertex x);
template <class T>
std::vector<T> vertex_masses(const EdgeMass<T>& mu);

template <class T>
Graph support_graph(const EdgeMass<T>& mu);

/// Sum over ordered m-tuples of distinct vertices of
/// mbar(x1) * prod mu(x_i x_{i+1}) * mbar(x_m), walking only support pairs.
template <class T>
T eval_optp(const EdgeMass<T>& mu, std::size_t m);

template <class T>
T eval_mu_graph(const EdgeMass<T>& mu, const Graph& gp);

/// Sum over copies H' of H with edges in the support of mu(H')^k.
template <class T>
T eval_optb(const EdgeMass<T>& mu, const Graph& h, unsigned k);

/// Partial derivatives with respect to every pair weight (including
/// zero-weight pairs), indexed by pair_index.
template <class T>
std::vector<T> grad_optp(const EdgeMass<T>& mu, std::size_t m);
template <class T>
std::vector<T> grad_optb(const EdgeMass<T>& mu, const Graph& h, unsigned k);

// JSON form {"ground": n, "weights": [[u, v, w], ...]}; only nonzero weights
// are written. Doubles use shortest round-trip notation, rationals "p/q".
std::string mass_to_json(const FloatMass& mu);
std::string mass_to_json(const ExactMass& mu);
FloatMass float_mass_from_json(std::string_view text);
ExactMass exact_mass_from_json(std::string_view text);

}  // namespace planex
