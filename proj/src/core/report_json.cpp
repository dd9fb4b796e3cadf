#include "core/report_json.hpp"

#include <cmath>
#include <sstream>

#include "core/certify.hpp"
#include "core/copies.hpp"
#include "core/counting_checks.hpp"
#include "core/error.hpp"
#include "core/extremal.hpp"
#include "core/gcl.hpp"
#include "core/graph_io.hpp"
#include "core/mass.hpp"
#include "core/objective.hpp"
#include "core/optimizer.hpp"
#include "core/oracle.hpp"
#include "core/planarity.hpp"

namespace planex {
namespace {

using nlohmann::json;

constexpr double kValueTolerance = 1e-8;
constexpr double kResidualTolerance = 1e-6;
constexpr double kEnvelopeSlack = 1e-9;
constexpr double kMaxTableRatio = 1.5;

template <class T>
T get_or(const json& req, const char* key, T fallback) {
  if (!req.contains(key) || req.at(key).is_null()) return fallback;
  return req.at(key).get<T>();
}

std::string get_string(const json& req, const char* key) {
  require(req.contains(key) && req.at(key).is_string(), ErrorKind::InvalidArgument,
          std::string("request needs a string field '") + key + "'");
  return req.at(key).get<std::string>();
}

Graph get_graph(const json& req, const char* key) {
  require(req.contains(key), ErrorKind::InvalidArgument,
          std::string("request needs a graph field '") + key + "'");
  const json& v = req.at(key);
  if (v.is_object()) return graph_from_json(v.dump());
  require(v.is_string(), ErrorKind::InvalidArgument, std::string("field '") + key + "' must be a graph");
  return parse_graph_descriptor(v.get<std::string>());
}

Rational get_rational(const json& req, const char* key, const Rational& fallback) {
  if (!req.contains(key)) return fallback;
  const json& v = req.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  fail(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be an integer or \"p/q\"");
}

json rational_json(const Rational& r) { return {{"fraction", to_string(r)}, {"value", to_double(r)}}; }

json graph_json(const Graph& g) {
  return {{"graph6", to_graph6(g)}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
}

ObjectiveSpec objective_from(const json& req) {
  const std::string objective = get_string(req, "objective");
  if (objective == "optp") return ObjectiveSpec::path(get_or<std::size_t>(req, "m", 0));
  if (objective == "optb")
    return ObjectiveSpec::blowup(get_graph(req, "pattern"), get_or<unsigned>(req, "k", 1));
  fail(ErrorKind::InvalidArgument, "objective must be optp or optb, got '" + objective + "'");
}

ExactMass exact_seed(const ObjectiveSpec& spec, std::size_t ground) {
  Graph g;
  if (spec.kind == ObjectiveSpec::Kind::Path)
    g = spec.m == 2 ? Graph::complete(2) : Graph::cycle(spec.m);
  else
    g = spec.pattern;
  return ExactMass::uniform_on(g, std::max(ground, g.vertex_count()));
}

template <class T>
T evaluate(const EdgeMass<T>& mu, const ObjectiveSpec& spec) {
  return spec.kind == ObjectiveSpec::Kind::Path ? eval_optp(mu, spec.m)
                                                : eval_optb(mu, spec.pattern, spec.k);
}

json certified_json(const CertifiedValue& c) {
  json out = {{"lower", rational_json(c.lower)},
              {"upper", rational_json(c.upper)},
              {"achieved", c.achieved},
              {"basis", c.basis}};
  out["exact"] = c.exact ? rational_json(*c.exact) : json(nullptr);
  out["conjectured"] = c.conjectured ? rational_json(*c.conjectured) : json(nullptr);
  return out;
}

json regularity_json(const RegularityReport& r) {
  return {{"value", r.value},
          {"max_edge_violation", r.max_edge_violation},
          {"max_vertex_violation", r.max_vertex_violation},
          {"exact_zero", r.exact_zero}};
}

json mass_bounds_json(const MassBoundsReport& r) {
  return {{"max_edge_violation", r.max_edge_violation},
          {"max_vertex_violation", r.max_vertex_violation},
          {"holds", r.holds}};
}

bool regularity_ok(const RegularityReport& r) {
  return r.max_edge_violation < kResidualTolerance && r.max_vertex_violation < kResidualTolerance;
}

// Regularity and mass bounds describe a global maximizer, so they are
// asserted only where the value matches a proven closed form.
template <class T>
void optimum_checks(const EdgeMass<T>& mu, const ObjectiveSpec& spec, bool at_optimum, json& out,
                    bool& pass) {
  if (spec.kind != ObjectiveSpec::Kind::Blowup) return;
  const RegularityReport reg = check_regularity(mu, spec.pattern, spec.k);
  const MassBoundsReport bounds = check_mass_bounds(mu, spec.pattern, spec.k, kResidualTolerance);
  out["regularity"] = regularity_json(reg);
  out["mass_bounds"] = mass_bounds_json(bounds);
  out["checks"]["regularity"] = at_optimum ? json(regularity_ok(reg)) : json(nullptr);
  out["checks"]["mass_bounds"] = at_optimum ? json(bounds.holds) : json(nullptr);
  if (at_optimum) pass = pass && regularity_ok(reg) && bounds.holds;
}

json run_optimize(const json& req) {
  const ObjectiveSpec spec = objective_from(req);
  OptimizerConfig config;
  config.restarts = get_or(req, "restarts", config.restarts);
  config.max_iterations = get_or(req, "max_iterations", config.max_iterations);
  config.tolerance = get_or(req, "tolerance", config.tolerance);
  config.seed = get_or(req, "seed", config.seed);
  config.threads = get_or(req, "threads", config.threads);
  if (req.contains("sizes")) {
    const auto sizes = req.at("sizes").get<std::vector<std::size_t>>();
    require(sizes.size() == 2 && sizes[0] <= sizes[1], ErrorKind::InvalidArgument,
            "sizes must be [lo, hi] with lo <= hi");
    config.min_ground = sizes[0];
    config.max_ground = sizes[1];
  }

  const OptResult r = maximize(spec, config);
  const CertifiedValue cert = certified_value(spec);
  const double feasible = evaluate(seed_mass(spec, spec.min_ground()), spec);

  json result = {{"value", r.value},
                 {"best_mass", json::parse(mass_to_json(r.best_mass))},
                 {"kkt_residual", r.kkt_residual},
                 {"lambda", r.lambda},
                 {"ground_sizes_swept", r.ground_sizes_swept},
                 {"restarts", r.restarts},
                 {"iterations", r.iterations},
                 {"converged", r.converged},
                 {"sweep_heuristic", r.sweep_heuristic},
                 {"supremum_not_achieved", r.supremum_not_achieved}};
  result["per_ground"] = json::array();
  for (const GroundSizeResult& g : r.per_ground)
    result["per_ground"].push_back({{"ground", g.ground}, {"value", g.value}, {"converged", g.converged}});

  json out = {{"command", "optimize"},
              {"objective", spec.name()},
              {"seed", config.seed},
              {"result", result},
              {"certified", certified_json(cert)},
              {"feasible_value", feasible}};
  json& checks = out["checks"];
  checks["within_upper"] = r.value <= to_double(cert.upper) + kEnvelopeSlack;
  checks["above_feasible"] = r.value >= feasible - kEnvelopeSlack;
  checks["kkt"] = r.supremum_not_achieved ? json(nullptr) : json(r.kkt_residual < kResidualTolerance);
  bool pass = checks["within_upper"].get<bool>() && checks["above_feasible"].get<bool>() &&
              (r.supremum_not_achieved || r.kkt_residual < kResidualTolerance);
  bool at_optimum = false;
  if (cert.exact && cert.achieved) {
    at_optimum = std::abs(r.value - to_double(*cert.exact)) <= kValueTolerance;
    checks["closed_form"] = at_optimum;
    pass = pass && at_optimum;
  } else {
    checks["closed_form"] = nullptr;
  }
  optimum_checks(r.best_mass, spec, at_optimum, out, pass);
  out["pass"] = pass;
  return out;
}

json run_edgetrans(const json& req) {
  const Graph h = get_graph(req, "edgetrans");
  const EdgeTransReport r = edgetrans_lower(h, get_or<unsigned>(req, "k", 1));
  const bool agree = r.direct == r.formula;
  return {{"command", "certify"},
          {"edgetrans",
           {{"graph", graph_json(h)},
            {"edge_transitive", r.edge_transitive},
            {"m", r.m},
            {"formula", rational_json(r.formula)},
            {"direct", rational_json(r.direct)},
            {"baseline", rational_json(r.baseline)},
            {"ratio", r.ratio},
            {"log_ratio", r.log_ratio},
            {"beats_baseline", r.formula > r.baseline}}},
          {"checks", {{"formula_matches_direct", agree}}},
          {"pass", agree}};
}

json run_certify(const json& req) {
  if (req.contains("edgetrans")) return run_edgetrans(req);
  const ObjectiveSpec spec = objective_from(req);
  const CertifiedValue cert = certified_value(spec);
  const std::string mode = get_or<std::string>(req, "mode", "rational");
  require(mode == "rational" || mode == "float", ErrorKind::InvalidArgument,
          "mode must be rational or float");
  json out = {{"command", "certify"},
              {"objective", spec.name()},
              {"mode", mode},
              {"certified", certified_json(cert)}};
  out["checks"] = json::object();
  bool pass = true;

  auto finish = [&](const auto& mu) {
    using T = typename std::decay_t<decltype(mu.weights())>::value_type;
    const auto value = evaluate(mu, spec);
    const KktReport<T> kkt = kkt_residual(mu, spec);
    bool at_optimum = false;
    if constexpr (std::is_same_v<T, Rational>) {
      out["mass"] = json::parse(mass_to_json(mu));
      out["value"] = rational_json(value);
      out["kkt"] = {{"lambda", rational_json(kkt.lambda)}, {"residual", rational_json(kkt.residual)}};
      at_optimum = cert.exact && cert.achieved && value == *cert.exact;
      out["checks"]["kkt"] = to_double(kkt.residual) < kResidualTolerance;
    } else {
      out["mass"] = json::parse(mass_to_json(mu));
      out["value"] = value;
      out["kkt"] = {{"lambda", kkt.lambda}, {"residual", kkt.residual}};
      at_optimum = cert.exact && cert.achieved && std::abs(value - to_double(*cert.exact)) <= kValueTolerance;
      out["checks"]["kkt"] = kkt.residual < kResidualTolerance;
    }
    out["checks"]["closed_form"] = cert.exact && cert.achieved ? json(at_optimum) : json(nullptr);
    pass = out["checks"]["kkt"].get<bool>();
    optimum_checks(mu, spec, at_optimum, out, pass);
  };

  const std::size_t ground = get_or<std::size_t>(req, "ground", 0);
  if (mode == "rational") {
    finish(req.contains("mass") ? exact_mass_from_json(req.at("mass").dump()) : exact_seed(spec, ground));
  } else {
    finish(req.contains("mass") ? float_mass_from_json(req.at("mass").dump())
                                : to_float(exact_seed(spec, ground)));
  }
  out["pass"] = pass;
  return out;
}

json inequality_json(const InequalityReport& r) {
  return {{"name", r.name},
          {"random_samples", r.random_samples},
          {"grid_points", r.grid_points},
          {"violations", r.violations},
          {"max_ratio", r.max_ratio},
          {"argmax", r.argmax},
          {"equality_case", r.equality_case},
          {"equality_exact", r.equality_exact},
          {"holds", r.holds()}};
}

json run_verify(const json& req) {
  const std::string suite = get_string(req, "suite");
  json out = {{"command", "verify"}, {"suite", suite}};
  const std::uint64_t seed = get_or<std::uint64_t>(req, "seed", 1);

  if (suite == "inequalities") {
    GridSpec grid;
    grid.resolution = get_or(req, "resolution", grid.resolution);
    grid.dimension = get_or<std::size_t>(req, "dimension", 4);
    const std::string mode = get_or<std::string>(req, "mode", "rational");
    grid.mode = mode == "float" ? GridSpec::Mode::Float : GridSpec::Mode::Rational;
    const std::size_t samples = get_or<std::size_t>(req, "samples", 100000);
    GridSpec offdiag_grid = grid;
    offdiag_grid.dimension = get_or<std::size_t>(req, "offdiag_dimension", 2);
    const InequalityReport reports[] = {verify_aequalb(samples, grid, seed),
                                        verify_offdiag(samples, offdiag_grid, seed + 1),
                                        verify_c4ineq(samples, grid, seed + 2)};
    out["reports"] = json::array();
    bool pass = true;
    for (const InequalityReport& r : reports) {
      out["reports"].push_back(inequality_json(r));
      pass = pass && r.holds();
    }
    out["seed"] = seed;
    out["pass"] = pass;
    return out;
  }

  if (suite == "2color") {
    const TwoColorReport r = verify_2color(get_or<std::size_t>(req, "m_max", 20));
    out["rows"] = json::array();
    for (const TwoColorRow& row : r.rows)
      out["rows"].push_back({{"m", row.m},
                             {"colorings", row.colorings},
                             {"counterexamples_scan", row.counterexamples_scan},
                             {"counterexamples_bitmask", row.counterexamples_bitmask}});
    out["colorings"] = r.colorings;
    out["counterexamples"] = r.counterexamples;
    out["methods_agree"] = r.methods_agree;
    out["witness"] = r.witness ? json({{"m", r.witness->first}, {"coloring", r.witness->second}}) : json(nullptr);
    out["pass"] = r.holds();
    return out;
  }

  if (suite == "grid") {
    const ObjectiveSpec spec = objective_from(req);
    const std::size_t ground = get_or<std::size_t>(req, "ground", spec.min_ground());
    const GridResult r = grid_maximize(spec, ground, get_or<std::size_t>(req, "resolution", 40),
                                       get_or<std::uint64_t>(req, "budget", 5'000'000));
    const CertifiedValue cert = certified_value(spec);
    const bool below = r.value <= to_double(cert.upper) + kEnvelopeSlack;
    out["objective"] = spec.name();
    out["ground"] = ground;
    out["value"] = r.value;
    out["argmax"] = r.argmax;
    out["gap"] = r.gap;
    out["points"] = r.points;
    out["certified"] = certified_json(cert);
    out["exact_within_gap"] =
        cert.exact ? json(std::abs(to_double(*cert.exact) - r.value) <= r.gap) : json(nullptr);
    out["checks"] = {{"below_upper", below}};
    out["pass"] = below;
    return out;
  }

  if (suite == "counting") {
    const Graph g = get_graph(req, "graph");
    const Rational c = get_rational(req, "c", Rational(3));
    const double eps = get_or(req, "eps", 0.25);
    const CodegreeBoundReport cb = check_codegree_bound(g, c, eps);
    out["graph"] = graph_json(g);
    out["codegree"] = {{"heavy", cb.heavy},
                       {"heavy_bound", cb.heavy_bound},
                       {"codegree_sum", cb.codegree_sum},
                       {"codegree_bound", cb.codegree_bound},
                       {"holds", cb.holds()}};
    bool pass = cb.holds();
    if (req.contains("pattern")) {
      const EasyUpperReport eu = verify_easyupper(g, get_graph(req, "pattern"), get_or<unsigned>(req, "k", 1));
      out["easyupper"] = {{"lhs", eu.lhs.str()},
                          {"power", eu.power.str()},
                          {"automorphisms", eu.automorphisms},
                          {"holds", eu.holds}};
      pass = pass && eu.holds;
    }
    if (req.contains("m")) {
      const OddPathReport op = verify_oddpath_bound(g, get_or<unsigned>(req, "m", 2));
      out["oddpath"] = {{"paths", op.paths}, {"power", op.power.str()}, {"holds", op.holds}};
      pass = pass && op.holds;
    }
    out["pass"] = pass;
    return out;
  }

  fail(ErrorKind::InvalidArgument, "suite must be inequalities, 2color, grid or counting");
}

json run_table(const json& req) {
  std::vector<Target> targets;
  for (const auto& t : get_or<std::vector<std::string>>(req, "targets", {})) targets.push_back(parse_target(t));
  const auto n_values = get_or<std::vector<std::size_t>>(req, "n", {});
  const BoundTable table = bound_table(targets, n_values);
  json out = {{"command", "table"}};
  out["rows"] = json::array();
  bool pass = true;
  for (const BoundRow& r : table.rows) {
    out["rows"].push_back({{"target", r.target},
                           {"n", r.n},
                           {"base", r.base},
                           {"part_size", r.part_size},
                           {"vertices", r.vertices},
                           {"lower", r.lower},
                           {"second", r.second},
                           {"second_method", r.second_method},
                           {"agree", r.agree},
                           {"upper", r.upper},
                           {"upper_formula", r.upper_formula},
                           {"ratio", r.ratio}});
    pass = pass && r.agree && r.ratio <= kMaxTableRatio;
  }
  out["pass"] = pass;
  return out;
}

json run_count(const json& req) {
  json out = {{"command", "count"}};
  if (req.contains("target")) {
    const Target target = parse_target(get_string(req, "target"));
    const std::size_t n = get_or<std::size_t>(req, "n", 0);
    ConstructionSpec spec;
    if (req.contains("mass")) {
      spec = mass_construction(float_mass_from_json(req.at("mass").dump()), n);
    } else {
      const Graph base = req.contains("base") ? get_graph(req, "base") : default_base(target);
      spec = uniform_construction(base, n);
    }
    const LowerBoundCount c = lower_bound_count(spec, target);
    out["target"] = target.name;
    out["base"] = graph_json(spec.base);
    out["part_sizes"] = spec.part_sizes;
    out["n"] = n;
    out["vertices"] = c.vertices;
    out["over_budget"] = c.vertices > n;
    out["count"] = c.count;
    out["second"] = c.second.str();
    out["second_method"] = c.second_method;
    out["agree"] = c.agree;
    out["pass"] = c.agree;
    return out;
  }

  const Graph host = get_graph(req, "graph");
  const Graph pattern = get_graph(req, "pattern");
  const std::uint64_t count = count_copies(host, pattern);
  out["graph"] = graph_json(host);
  out["pattern"] = graph_json(pattern);
  out["count"] = count;
  bool pass = true;
  if (const std::size_t r = recognize_path(pattern); r >= 1) {
    const std::uint64_t dfs = count_paths(host, r);
    out["path_dfs"] = dfs;
    pass = dfs == count;
  } else if (const std::size_t r = recognize_cycle(pattern); r >= 3) {
    const std::uint64_t dfs = count_cycles(host, r);
    out["cycle_dfs"] = dfs;
    pass = dfs == count;
  }
  out["pass"] = pass;
  return out;
}

json run_oracle(const json& req) {
  const std::string kind = get_or<std::string>(req, "kind", "extremal");
  json out = {{"command", "oracle"}, {"kind", kind}};
  if (kind == "extremal") {
    GraphClass cls;
    const std::string name = get_or<std::string>(req, "class", "planar");
    require(name == "planar" || name == "gcl", ErrorKind::InvalidArgument, "class must be planar or gcl");
    cls.kind = name == "planar" ? GraphClass::Kind::Planar : GraphClass::Kind::Gcl;
    cls.c = get_rational(req, "c", Rational(3));
    const std::size_t n = get_or<std::size_t>(req, "n", 0);
    const Graph pattern = get_graph(req, "pattern");
    const ExtremalSearchResult r = exhaustive_extremal(n, pattern, cls);
    out["class"] = name;
    if (cls.kind == GraphClass::Kind::Gcl) out["c"] = to_string(cls.c);
    out["n"] = n;
    out["pattern"] = graph_json(pattern);
    out["max_count"] = r.max_count;
    out["argmax"] = graph_json(r.argmax);
    out["classes_examined"] = r.classes_examined;
  } else if (kind == "gcl") {
    const Graph g = get_graph(req, "graph");
    const GclReport r = gcl_membership(g, get_rational(req, "c", Rational(3)));
    out["graph"] = graph_json(g);
    out["member"] = r.member;
    out["bound"] = to_string(r.bound);
    out["densest"] = {{"density", rational_json(r.densest.density)}, {"vertices", r.densest.vertices}};
    out["k33"] = r.k33 ? json({{"left", r.k33->left}, {"right", r.k33->right}}) : json(nullptr);
  } else if (kind == "planar") {
    const Graph g = get_graph(req, "graph");
    out["graph"] = graph_json(g);
    out["planar"] = is_planar_small(g);
  } else if (kind == "orbits") {
    const Graph g = get_graph(req, "graph");
    out["graph"] = graph_json(g);
    out["automorphisms"] = automorphism_count(g);
    out["edge_orbits"] = edge_orbits(g);
    out["edge_transitive"] = is_edge_transitive(g);
  } else {
    fail(ErrorKind::InvalidArgument, "oracle kind must be extremal, gcl, planar or orbits");
  }
  out["pass"] = true;
  return out;
}

void flatten(const json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << "\n";
  }
}

}  // namespace

json run_request(const json& request) {
  require(request.is_object(), ErrorKind::InvalidArgument, "request must be a JSON object");
  const std::string command = get_string(request, "command");
  if (command == "optimize") return run_optimize(request);
  if (command == "certify") return run_certify(request);
  if (command == "verify") return run_verify(request);
  if (command == "table") return run_table(request);
  if (command == "count") return run_count(request);
  if (command == "oracle") return run_oracle(request);
  fail(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
}

std::string run_request_string(std::string_view request) {
  json parsed;
  try {
    parsed = json::parse(request);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("request is not valid JSON: ") + e.what());
  }
  try {
    return run_request(parsed).dump(2);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed request: ") + e.what());
  }
}

std::string render_response_text(const json& response) {
  if (response.value("command", "") == "table") {
    BoundTable table;
    for (const json& r : response.at("rows")) {
      BoundRow row;
      row.target = r.at("target").get<std::string>();
      row.n = r.at("n").get<std::size_t>();
      row.part_size = r.at("part_size").get<std::size_t>();
      row.lower = r.at("lower").get<std::uint64_t>();
      row.upper = r.at("upper").get<double>();
      row.ratio = r.at("ratio").get<double>();
      row.agree = r.at("agree").get<bool>();
      row.upper_formula = r.at("upper_formula").get<std::string>();
      table.rows.push_back(std::move(row));
    }
    return render_text(table) + "pass: " + (response.at("pass").get<bool>() ? "true" : "false") + "\n";
  }
  std::ostringstream out;
  flatten(response, "", out);
  return out.str();
}

}  // namespace planex
