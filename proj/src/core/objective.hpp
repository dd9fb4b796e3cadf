#pragma once

#include <span>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace planex {

struct ObjectiveSpec {
  enum class Kind { Path, Blowup };

  Kind kind = Kind::Path;
  std::size_t m = 2;  // path length for optp
  Graph pattern;      // H for optb
  unsigned k = 1;

  static ObjectiveSpec path(std::size_t m);
  static ObjectiveSpec blowup(const Graph& h, unsigned k);

  /// Degree of homogeneity: m+1 for optp, k*|E(H)| for optb.
  std::size_t degree() const;
  /// Smallest ground set on which the objective can be nonzero.
  std::size_t min_ground() const;
  std::string name() const;
};

/// The objective over all pairs of a fixed ground set, with every term
/// (path tuple or copy of H in the complete graph) precomputed. Works on
/// arbitrary nonnegative weight vectors, not only points of the simplex.
template <class T>
class CompiledObjective {
 public:
  CompiledObjective(const ObjectiveSpec& spec, std::size_t ground);

  std::size_t ground_size() const noexcept { return ground_; }
  std::size_t dimension() const noexcept { return pairs_.size(); }
  std::size_t term_count() const noexcept { return terms_; }
  const ObjectiveSpec& spec() const noexcept { return spec_; }

  T value(std::span<const T> w) const;
  T value_and_gradient(std::span<const T> w, std::vector<T>& grad) const;

 private:
  std::vector<T> vertex_sums(std::span<const T> w) const;

  ObjectiveSpec spec_;
  std::size_t ground_ = 0;
  std::vector<Edge> pairs_;
  std::size_t terms_ = 0;
  std::size_t width_ = 0;             // pair indices per term
  std::vector<std::size_t> term_pairs_;
  std::vector<Vertex> term_ends_;     // path objective only: first, last
};

}  // namespace planex
