#include "core/mass.hpp"

#include <cmath>

#include <json.hpp>

#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/objective.hpp"

namespace planex {

std::size_t pair_count(std::size_t ground) { return ground * (ground - (ground > 0 ? 1 : 0)) / 2; }

std::size_t pair_index(std::size_t ground, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(a) * ground - static_cast<std::size_t>(a) * (a + 1) / 2 +
         (b - a - 1);
}

std::vector<Edge> all_pairs(std::size_t ground) {
  std::vector<Edge> pairs;
  pairs.reserve(pair_count(ground));
  for (Vertex a = 0; a < ground; ++a)
    for (Vertex b = a + 1; b < ground; ++b) pairs.push_back({a, b});
  return pairs;
}

template <>
bool is_positive<double>(const double& w) {
  return w > kSupportThreshold;
}
template <>
bool is_positive<Rational>(const Rational& w) {
  return w > 0;
}

namespace {

void check_total(const std::vector<double>& w) {
  double total = 0;
  for (double x : w) total += x;
  require(std::abs(total - 1.0) <= 1e-12, ErrorKind::InvalidArgument,
          "mass weights sum to " + std::to_string(total) + ", expected 1");
}

void check_total(const std::vector<Rational>& w) {
  Rational total = 0;
  for (const Rational& x : w) total += x;
  require(total == 1, ErrorKind::InvalidArgument,
          "mass weights sum to " + to_string(total) + ", expected exactly 1");
}

}  // namespace

template <class T>
EdgeMass<T>::EdgeMass(std::size_t ground, std::vector<T> weights)
    : ground_(ground), weights_(std::move(weights)) {
  require(weights_.size() == pair_count(ground_), ErrorKind::InvalidArgument,
          "mass needs one weight per pair of the ground set");
  for (const T& w : weights_) {
    if constexpr (std::is_same_v<T, double>)
      require(std::isfinite(w), ErrorKind::InvalidArgument, "mass weight is not finite");
    require(w >= 0, ErrorKind::InvalidArgument, "mass weight is negative");
  }
  check_total(weights_);
}

template <class T>
EdgeMass<T> EdgeMass<T>::from_pairs(std::size_t ground,
                                    const std::vector<std::pair<Edge, T>>& pairs) {
  std::vector<T> w(pair_count(ground), T(0));
  std::vector<char> seen(w.size(), 0);
  for (const auto& [e, value] : pairs) {
    require(e.u != e.v && e.u < ground && e.v < ground, ErrorKind::InvalidArgument,
            "mass pair outside the ground set");
    const std::size_t i = pair_index(ground, e.u, e.v);
    require(!seen[i], ErrorKind::InvalidArgument, "mass pair listed twice");
    seen[i] = 1;
    w[i] = value;
  }
  return EdgeMass(ground, std::move(w));
}

template <class T>
EdgeMass<T> EdgeMass<T>::uniform_on(const Graph& g) {
  return uniform_on(g, g.vertex_count());
}

template <class T>
EdgeMass<T> EdgeMass<T>::uniform_on(const Graph& g, std::size_t ground) {
  require(g.edge_count() > 0, ErrorKind::InvalidArgument, "uniform mass needs an edge");
  require(g.vertex_count() <= ground, ErrorKind::InvalidArgument, "graph larger than ground set");
  std::vector<T> w(pair_count(ground), T(0));
  const T share = T(1) / T(static_cast<long long>(g.edge_count()));
  for (const Edge& e : g.edges()) w[pair_index(ground, e.u, e.v)] = share;
  return EdgeMass(ground, std::move(w));
}

template <class T>
T EdgeMass<T>::weight(Vertex a, Vertex b) const {
  require(a != b && a < ground_ && b < ground_, ErrorKind::InvalidArgument,
          "pair outside the ground set");
  return weights_[pair_index(ground_, a, b)];
}

template class EdgeMass<double>;
template class EdgeMass<Rational>;

FloatMass to_float(const ExactMass& mu) {
  std::vector<double> w;
  w.reserve(mu.weights().size());
  for (const Rational& x : mu.weights()) w.push_back(to_double(x));
  double total = 0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return FloatMass(mu.ground_size(), std::move(w));
}

template <class T>
T vertex_mass(const EdgeMass<T>& mu, Vertex x) {
  require(x < mu.ground_size(), ErrorKind::InvalidArgument, "vertex outside the ground set");
  T total(0);
  for (Vertex y = 0; y < mu.ground_size(); ++y)
    if (y != x) total += mu.weight(x, y);
  return total;
}

template <class T>
std::vector<T> vertex_masses(const EdgeMass<T>& mu) {
  const std::size_t n = mu.ground_size();
  std::vector<T> out(n, T(0));
  std::size_t i = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b, ++i) {
      out[a] += mu.weight(i);
      out[b] += mu.weight(i);
    }
  return out;
}

template <class T>
Graph support_graph(const EdgeMass<T>& mu) {
  const std::size_t n = mu.ground_size();
  std::vector<Edge> edges;
  std::size_t i = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b, ++i)
      if (is_positive(mu.weight(i))) edges.push_back({a, b});
  return Graph(n, edges);
}

template <class T>
T eval_optp(const EdgeMass<T>& mu, std::size_t m) {
  require(m >= 2, ErrorKind::InvalidArgument, "optp needs m >= 2");
  const std::size_t n = mu.ground_size();
  if (n < m) return T(0);
  const Graph support = support_graph(mu);
  const std::vector<T> mbar = vertex_masses(mu);
  std::vector<char> used(n, 0);
  T total(0);
  auto extend = [&](auto&& self, Vertex first, Vertex v, std::size_t length, const T& product) -> void {
    if (length == m) {
      total += mbar[first] * product * mbar[v];
      return;
    }
    for (Vertex w : support.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      self(self, first, w, length + 1, product * mu.weight(v, w));
      used[w] = 0;
    }
  };
  for (Vertex x = 0; x < n; ++x) {
    used[x] = 1;
    extend(extend, x, x, 1, T(1));
    used[x] = 0;
  }
  return total;
}

template <class T>
T eval_mu_graph(const EdgeMass<T>& mu, const Graph& gp) {
  require(gp.vertex_count() <= mu.ground_size(), ErrorKind::InvalidArgument,
          "graph does not fit in the ground set");
  T product(1);
  for (const Edge& e : gp.edges()) product *= mu.weight(e.u, e.v);
  return product;
}

template <class T>
T eval_optb(const EdgeMass<T>& mu, const Graph& h, unsigned k) {
  require(k >= 1, ErrorKind::InvalidArgument, "optb needs k >= 1");
  require(h.vertex_count() >= 1 && !h.has_isolated_vertices(), ErrorKind::InvalidArgument,
          "optb pattern has an isolated vertex");
  T total(0);
  if (h.vertex_count() > mu.ground_size()) return total;
  const CopyEnumeration copies = enumerate_copies(support_graph(mu), h);
  for (const Copy& c : copies.copies) {
    T product(1);
    for (const Edge& e : c.edges) product *= mu.weight(e.u, e.v);
    total += ipow(product, k);
  }
  return total;
}

template <class T>
std::vector<T> grad_optp(const EdgeMass<T>& mu, std::size_t m) {
  const CompiledObjective<T> objective(ObjectiveSpec::path(m), mu.ground_size());
  std::vector<T> grad;
  objective.value_and_gradient(mu.weights(), grad);
  return grad;
}

template <class T>
std::vector<T> grad_optb(const EdgeMass<T>& mu, const Graph& h, unsigned k) {
  const CompiledObjective<T> objective(ObjectiveSpec::blowup(h, k), mu.ground_size());
  std::vector<T> grad;
  objective.value_and_gradient(mu.weights(), grad);
  return grad;
}

#define PLANEX_INSTANTIATE(T)                                                      \
  template T vertex_mass(const EdgeMass<T>&, Vertex);                              \
  template std::vector<T> vertex_masses(const EdgeMass<T>&);                       \
  template Graph support_graph(const EdgeMass<T>&);                                \
  template T eval_optp(const EdgeMass<T>&, std::size_t);                           \
  template T eval_mu_graph(const EdgeMass<T>&, const Graph&);                      \
  template T eval_optb(const EdgeMass<T>&, const Graph&, unsigned);                \
  template std::vector<T> grad_optp(const EdgeMass<T>&, std::size_t);              \
  template std::vector<T> grad_optb(const EdgeMass<T>&, const Graph&, unsigned);
PLANEX_INSTANTIATE(double)
PLANEX_INSTANTIATE(Rational)
#undef PLANEX_INSTANTIATE

namespace {

template <class T, class Writer>
std::string write_mass(const EdgeMass<T>& mu, Writer write) {
  nlohmann::json doc;
  doc["ground"] = mu.ground_size();
  doc["weights"] = nlohmann::json::array();
  std::size_t i = 0;
  for (Vertex a = 0; a < mu.ground_size(); ++a)
    for (Vertex b = a + 1; b < mu.ground_size(); ++b, ++i)
      if (mu.weight(i) != 0) doc["weights"].push_back({a, b, write(mu.weight(i))});
  return doc.dump();
}

template <class T, class Reader>
EdgeMass<T> read_mass(std::string_view text, Reader read) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("mass JSON: ") + e.what());
  }
  require(doc.is_object() && doc.contains("ground") && doc["ground"].is_number_unsigned() &&
              doc.contains("weights") && doc["weights"].is_array(),
          ErrorKind::Parse, "mass JSON: expected {\"ground\": n, \"weights\": [[u,v,w],...]}");
  const auto ground = doc["ground"].get<std::size_t>();
  std::vector<std::pair<Edge, T>> pairs;
  for (const auto& item : doc["weights"]) {
    require(item.is_array() && item.size() == 3 && item[0].is_number_unsigned() &&
                item[1].is_number_unsigned(),
            ErrorKind::Parse, "mass JSON: each weight must be [u, v, w]");
    pairs.push_back({make_edge(item[0].get<Vertex>(), item[1].get<Vertex>()), read(item[2])});
  }
  return EdgeMass<T>::from_pairs(ground, pairs);
}

}  // namespace

std::string mass_to_json(const FloatMass& mu) {
  return write_mass(mu, [](double w) { return nlohmann::json(w); });
}

std::string mass_to_json(const ExactMass& mu) {
  return write_mass(mu, [](const Rational& w) { return nlohmann::json(to_string(w)); });
}

FloatMass float_mass_from_json(std::string_view text) {
  return read_mass<double>(text, [](const nlohmann::json& v) -> double {
    if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
    require(v.is_number(), ErrorKind::Parse, "mass JSON: weight must be a number or \"p/q\"");
    return v.get<double>();
  });
}

ExactMass exact_mass_from_json(std::string_view text) {
  return read_mass<Rational>(text, [](const nlohmann::json& v) -> Rational {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    require(v.is_number(), ErrorKind::Parse, "mass JSON: weight must be a number or \"p/q\"");
    return Rational(v.get<double>());
  });
}

}  // namespace planex
