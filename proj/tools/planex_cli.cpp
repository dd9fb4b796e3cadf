#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "planex/planex.h"

namespace {

using nlohmann::json;

struct CliError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Accepts library descriptors, inline JSON edge lists, bare graph6 bodies and
// @file for either of the file forms.
std::string graph_arg(std::string text) {
  if (!text.empty() && text.front() == '@') text = read_file(text.substr(1));
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  planex_graph* g = nullptr;
  if (planex_graph_parse(text.c_str(), &g) == PLANEX_OK) {
    planex_graph_free(g);
    return text;
  }
  const std::string message = planex_last_error();
  const std::string g6 = "g6:" + text;
  if (planex_graph_parse(g6.c_str(), &g) == PLANEX_OK) {
    planex_graph_free(g);
    return g6;
  }
  throw CliError{"bad graph '" + text + "': " + message};
}

std::vector<std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = std::stoul(text);
    return {v, v};
  }
  return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
}

struct ObjectiveArgs {
  std::string objective;
  std::size_t m = 0;
  std::string pattern;
  unsigned k = 1;

  void add_to(CLI::App* app, bool required) {
    auto* opt = app->add_option("--objective", objective, "optp or optb")->check(CLI::IsMember({"optp", "optb"}));
    if (required) opt->required();
    app->add_option("--m", m, "path length for optp");
    app->add_option("--pattern", pattern, "pattern graph H for optb");
    app->add_option("--k", k, "blow-up parameter");
  }

  void fill(json& req) const {
    if (objective.empty()) return;
    req["objective"] = objective;
    if (objective == "optp") req["m"] = m;
    if (objective == "optb") {
      if (pattern.empty()) throw CliError{"optb needs --pattern"};
      req["pattern"] = graph_arg(pattern);
      req["k"] = k;
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted path and blow-up functionals, certificates and planar extremal bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out_path;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", out_path, "write output here instead of stdout");

  json req;

  auto* count = app.add_subcommand("count", "count copies of a pattern, or of a target in a lower-bound construction");
  std::string count_graph, count_pattern, count_target, count_base, count_mass;
  std::size_t count_n = 0;
  count->add_option("--graph", count_graph, "host graph");
  count->add_option("--pattern", count_pattern, "pattern graph");
  count->add_option("--target", count_target, "P<odd>, C<even>, K2,<k> or blowup(<graph>,<k>)");
  count->add_option("--n", count_n, "vertex budget of the construction");
  count->add_option("--base", count_base, "construction base graph");
  count->add_option("--mass", count_mass, "mass JSON file for a mass-driven construction");

  auto* optimize = app.add_subcommand("optimize", "maximize optp or optb over masses");
  ObjectiveArgs opt_obj;
  opt_obj.add_to(optimize, true);
  std::string opt_sizes;
  std::optional<std::size_t> opt_restarts, opt_iterations;
  std::optional<double> opt_tolerance;
  unsigned opt_threads = 1;
  optimize->add_option("--sizes", opt_sizes, "ground sizes lo..hi");
  optimize->add_option("--restarts", opt_restarts, "restarts per ground size");
  optimize->add_option("--max-iterations", opt_iterations, "iteration cap per restart");
  optimize->add_option("--tolerance", opt_tolerance, "stationarity tolerance");
  optimize->add_option("--threads", opt_threads, "worker threads")->capture_default_str();

  auto* certify = app.add_subcommand("certify", "certify a mass against the closed forms and optimality conditions");
  ObjectiveArgs cert_obj;
  cert_obj.add_to(certify, false);
  std::string cert_mass, cert_mode = "rational", cert_edgetrans;
  std::size_t cert_ground = 0;
  unsigned cert_k = 1;
  certify->add_option("--mass", cert_mass, "mass JSON file (default: the uniform seed mass)");
  certify->add_option("--mode", cert_mode, "arithmetic")->check(CLI::IsMember({"rational", "float"}));
  certify->add_option("--ground", cert_ground, "embed the seed mass in a larger ground set");
  certify->add_option("--edgetrans", cert_edgetrans, "edge-transitive graph for the one-edge-removed lower bound");
  certify->add_option("--edgetrans-k", cert_k, "k for --edgetrans");

  auto* verify = app.add_subcommand("verify", "run an oracle suite");
  std::string suite;
  ObjectiveArgs verify_obj;
  std::optional<std::size_t> v_samples, v_resolution, v_dimension, v_m_max, v_ground;
  std::optional<std::uint64_t> v_budget;
  std::string v_mode = "rational", v_graph, v_pattern, v_c = "3";
  std::optional<unsigned> v_path_m;
  double v_eps = 0.25;
  unsigned v_k = 1;
  verify->add_option("--suite", suite, "suite")
      ->required()
      ->check(CLI::IsMember({"inequalities", "2color", "grid", "counting"}));
  verify_obj.add_to(verify, false);
  verify->add_option("--samples", v_samples, "random samples per inequality");
  verify->add_option("--resolution", v_resolution, "grid resolution");
  verify->add_option("--dimension", v_dimension, "grid dimension");
  verify->add_option("--mode", v_mode, "grid arithmetic")->check(CLI::IsMember({"rational", "float"}));
  verify->add_option("--m-max", v_m_max, "largest cycle length for 2color");
  verify->add_option("--ground", v_ground, "ground size for the grid suite");
  verify->add_option("--budget", v_budget, "grid point budget");
  verify->add_option("--graph", v_graph, "host graph for the counting suite");
  verify->add_option("--host-pattern", v_pattern, "pattern for the codegree product bound");
  verify->add_option("--host-k", v_k, "k for --host-pattern");
  verify->add_option("--path-m", v_path_m, "m for the path bound");
  verify->add_option("--c", v_c, "class constant");
  verify->add_option("--eps", v_eps, "heavy-vertex threshold");

  auto* table = app.add_subcommand("table", "lower/upper bound table");
  std::vector<std::string> targets;
  std::vector<std::size_t> n_values;
  table->add_option("--targets", targets, "targets")->required()->delimiter(';');
  table->add_option("--n", n_values, "vertex counts")->required()->delimiter(',');

  auto* oracle = app.add_subcommand("oracle", "exhaustive and structural oracles");
  std::string o_kind = "extremal", o_pattern, o_class = "planar", o_c = "3", o_graph;
  std::size_t o_n = 0;
  oracle->add_option("--kind", o_kind, "oracle")->check(CLI::IsMember({"extremal", "gcl", "planar", "orbits"}));
  oracle->add_option("--n", o_n, "vertices for the exhaustive search");
  oracle->add_option("--pattern", o_pattern, "pattern graph");
  oracle->add_option("--class", o_class, "graph class")->check(CLI::IsMember({"planar", "gcl"}));
  oracle->add_option("--c", o_c, "class constant");
  oracle->add_option("--graph", o_graph, "graph to test");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      req["command"] = "count";
      if (!count_target.empty()) {
        req["target"] = count_target;
        req["n"] = count_n;
        if (!count_base.empty()) req["base"] = graph_arg(count_base);
        if (!count_mass.empty()) req["mass"] = json::parse(read_file(count_mass));
      } else {
        if (count_graph.empty() || count_pattern.empty()) throw CliError{"count needs --graph and --pattern, or --target"};
        req["graph"] = graph_arg(count_graph);
        req["pattern"] = graph_arg(count_pattern);
      }
    } else if (*optimize) {
      req["command"] = "optimize";
      opt_obj.fill(req);
      req["seed"] = seed;
      req["threads"] = opt_threads;
      if (!opt_sizes.empty()) req["sizes"] = parse_range(opt_sizes);
      if (opt_restarts) req["restarts"] = *opt_restarts;
      if (opt_iterations) req["max_iterations"] = *opt_iterations;
      if (opt_tolerance) req["tolerance"] = *opt_tolerance;
    } else if (*certify) {
      req["command"] = "certify";
      if (!cert_edgetrans.empty()) {
        req["edgetrans"] = graph_arg(cert_edgetrans);
        req["k"] = cert_k;
      } else {
        if (cert_obj.objective.empty()) throw CliError{"certify needs --objective or --edgetrans"};
        cert_obj.fill(req);
        req["mode"] = cert_mode;
        if (cert_ground) req["ground"] = cert_ground;
        if (!cert_mass.empty()) req["mass"] = json::parse(read_file(cert_mass));
      }
    } else if (*verify) {
      req["command"] = "verify";
      req["suite"] = suite;
      req["seed"] = seed;
      req["mode"] = v_mode;
      if (v_samples) req["samples"] = *v_samples;
      if (v_resolution) req["resolution"] = *v_resolution;
      if (v_dimension) req["dimension"] = *v_dimension;
      if (v_m_max) req["m_max"] = *v_m_max;
      if (v_ground) req["ground"] = *v_ground;
      if (v_budget) req["budget"] = *v_budget;
      if (suite == "grid") {
        if (verify_obj.objective.empty()) throw CliError{"grid suite needs --objective"};
        verify_obj.fill(req);
      }
      if (suite == "counting") {
        if (v_graph.empty()) throw CliError{"counting suite needs --graph"};
        req["graph"] = graph_arg(v_graph);
        req["c"] = v_c;
        req["eps"] = v_eps;
        if (!v_pattern.empty()) {
          req["pattern"] = graph_arg(v_pattern);
          req["k"] = v_k;
        }
        if (v_path_m) req["m"] = *v_path_m;
      }
    } else if (*table) {
      req["command"] = "table";
      req["targets"] = targets;
      req["n"] = n_values;
    } else if (*oracle) {
      req["command"] = "oracle";
      req["kind"] = o_kind;
      if (o_kind == "extremal") {
        if (o_pattern.empty()) throw CliError{"extremal oracle needs --pattern"};
        req["n"] = o_n;
        req["pattern"] = graph_arg(o_pattern);
        req["class"] = o_class;
        req["c"] = o_c;
      } else {
        if (o_graph.empty()) throw CliError{"oracle needs --graph"};
        req["graph"] = graph_arg(o_graph);
        req["c"] = o_c;
      }
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  char* response = nullptr;
  const planex_status status = planex_run_json(req.dump().c_str(), &response);
  if (status != PLANEX_OK) {
    std::cerr << "error (" << planex_status_name(status) << "): " << planex_last_error() << "\n";
    return 2;
  }
  std::string output = response;
  const bool pass = json::parse(output).value("pass", false);
  if (format == "text") {
    char* text = nullptr;
    if (planex_render_text(response, &text) != PLANEX_OK) {
      planex_string_free(response);
      std::cerr << "error: " << planex_last_error() << "\n";
      return 2;
    }
    output = text;
    planex_string_free(text);
  } else {
    output += "\n";
  }
  planex_string_free(response);

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    if (!out || !(out << output)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
  }
  return pass ? 0 : 1;
}
