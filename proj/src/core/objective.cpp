#include "core/objective.hpp"

#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/graph_io.hpp"
#include "core/mass.hpp"
#include "core/rational.hpp"

namespace planex {

ObjectiveSpec ObjectiveSpec::path(std::size_t m) {
  require(m >= 2, ErrorKind::InvalidArgument, "optp needs m >= 2");
  ObjectiveSpec spec;
  spec.kind = Kind::Path;
  spec.m = m;
  return spec;
}

ObjectiveSpec ObjectiveSpec::blowup(const Graph& h, unsigned k) {
  require(k >= 1, ErrorKind::InvalidArgument, "optb needs k >= 1");
  require(h.edge_count() >= 1, ErrorKind::InvalidArgument, "optb needs a pattern with edges");
  require(!h.has_isolated_vertices(), ErrorKind::InvalidArgument,
          "optb pattern has an isolated vertex");
  ObjectiveSpec spec;
  spec.kind = Kind::Blowup;
  spec.pattern = h;
  spec.m = h.edge_count();
  spec.k = k;
  return spec;
}

std::size_t ObjectiveSpec::degree() const {
  return kind == Kind::Path ? m + 1 : static_cast<std::size_t>(k) * pattern.edge_count();
}

std::size_t ObjectiveSpec::min_ground() const {
  return kind == Kind::Path ? m : pattern.vertex_count();
}

std::string ObjectiveSpec::name() const {
  if (kind == Kind::Path) return "optp(" + std::to_string(m) + ")";
  return "optb(g6:" + to_graph6(pattern) + "," + std::to_string(k) + ")";
}

template <class T>
CompiledObjective<T>::CompiledObjective(const ObjectiveSpec& spec, std::size_t ground)
    : spec_(spec), ground_(ground), pairs_(all_pairs(ground)) {
  if (spec.kind == ObjectiveSpec::Kind::Path) {
    width_ = spec.m - 1;
    if (ground < spec.m) return;
    std::vector<Vertex> tuple(spec.m);
    std::vector<char> used(ground, 0);
    // Only tuples with first < last; the reversed tuple gives the same term.
    auto extend = [&](auto&& self, std::size_t depth) -> void {
      if (depth == spec.m) {
        if (tuple.front() > tuple.back()) return;
        term_ends_.push_back(tuple.front());
        term_ends_.push_back(tuple.back());
        for (std::size_t i = 0; i + 1 < spec.m; ++i)
          term_pairs_.push_back(pair_index(ground, tuple[i], tuple[i + 1]));
        ++terms_;
        return;
      }
      for (Vertex v = 0; v < ground; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        tuple[depth] = v;
        self(self, depth + 1);
        used[v] = 0;
      }
    };
    extend(extend, 0);
  } else {
    width_ = spec.pattern.edge_count();
    if (ground < spec.pattern.vertex_count()) return;
    const CopyEnumeration copies = enumerate_copies(Graph::complete(ground), spec.pattern);
    for (const Copy& c : copies.copies) {
      for (const Edge& e : c.edges) term_pairs_.push_back(pair_index(ground, e.u, e.v));
      ++terms_;
    }
  }
}

template <class T>
std::vector<T> CompiledObjective<T>::vertex_sums(std::span<const T> w) const {
  std::vector<T> sums(ground_, T(0));
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    sums[pairs_[i].u] += w[i];
    sums[pairs_[i].v] += w[i];
  }
  return sums;
}

template <class T>
T CompiledObjective<T>::value(std::span<const T> w) const {
  require(w.size() == pairs_.size(), ErrorKind::InvalidArgument, "objective: weight count mismatch");
  T total(0);
  if (spec_.kind == ObjectiveSpec::Kind::Path) {
    const std::vector<T> mbar = vertex_sums(w);
    for (std::size_t t = 0; t < terms_; ++t) {
      T term = mbar[term_ends_[2 * t]] * mbar[term_ends_[2 * t + 1]];
      for (std::size_t i = 0; i < width_; ++i) term *= w[term_pairs_[t * width_ + i]];
      total += term;
    }
    return T(2) * total;
  }
  for (std::size_t t = 0; t < terms_; ++t) {
    T product(1);
    for (std::size_t i = 0; i < width_; ++i) product *= w[term_pairs_[t * width_ + i]];
    total += ipow(product, spec_.k);
  }
  return total;
}

template <class T>
T CompiledObjective<T>::value_and_gradient(std::span<const T> w, std::vector<T>& grad) const {
  require(w.size() == pairs_.size(), ErrorKind::InvalidArgument, "objective: weight count mismatch");
  grad.assign(pairs_.size(), T(0));
  std::vector<T> prefix(width_ + 1), suffix(width_ + 1);
  T total(0);

  auto products = [&](std::size_t t) {
    const std::size_t* idx = &term_pairs_[t * width_];
    prefix[0] = T(1);
    for (std::size_t i = 0; i < width_; ++i) prefix[i + 1] = prefix[i] * w[idx[i]];
    suffix[width_] = T(1);
    for (std::size_t i = width_; i-- > 0;) suffix[i] = suffix[i + 1] * w[idx[i]];
    return idx;
  };

  if (spec_.kind == ObjectiveSpec::Kind::Path) {
    const std::vector<T> mbar = vertex_sums(w);
    std::vector<T> endpoint(ground_, T(0));
    for (std::size_t t = 0; t < terms_; ++t) {
      const std::size_t* idx = products(t);
      const Vertex first = term_ends_[2 * t], last = term_ends_[2 * t + 1];
      const T& path = prefix[width_];
      total += mbar[first] * path * mbar[last];
      endpoint[first] += path * mbar[last];
      endpoint[last] += mbar[first] * path;
      const T ends = mbar[first] * mbar[last];
      for (std::size_t i = 0; i < width_; ++i) grad[idx[i]] += ends * prefix[i] * suffix[i + 1];
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      grad[i] += endpoint[pairs_[i].u] + endpoint[pairs_[i].v];
      grad[i] *= T(2);
    }
    return T(2) * total;
  }

  const unsigned k = spec_.k;
  for (std::size_t t = 0; t < terms_; ++t) {
    const std::size_t* idx = products(t);
    const T& product = prefix[width_];
    const T lower = k == 1 ? T(1) : ipow(product, k - 1);
    total += lower * product;
    const T scale = T(k) * lower;
    for (std::size_t i = 0; i < width_; ++i) grad[idx[i]] += scale * prefix[i] * suffix[i + 1];
  }
  return total;
}

template class CompiledObjective<double>;
template class CompiledObjective<Rational>;

}  // namespace planex
