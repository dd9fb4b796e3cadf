#include "planex/planex.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/copies.hpp"
#include "core/error.hpp"
#include "core/gcl.hpp"
#include "core/graph_io.hpp"
#include "core/mass.hpp"
#include "core/report_json.hpp"

struct planex_graph {
  planex::Graph graph;
};

struct planex_mass {
  planex::FloatMass mass;
};

namespace {

thread_local std::string last_error;

planex_status status_of(planex::ErrorKind kind) {
  switch (kind) {
    case planex::ErrorKind::InvalidArgument: return PLANEX_INVALID_ARGUMENT;
    case planex::ErrorKind::Precondition: return PLANEX_PRECONDITION;
    case planex::ErrorKind::Parse: return PLANEX_PARSE_ERROR;
    case planex::ErrorKind::Budget: return PLANEX_BUDGET_EXCEEDED;
    case planex::ErrorKind::Unsupported: return PLANEX_UNSUPPORTED;
  }
  return PLANEX_INTERNAL_ERROR;
}

template <class F>
planex_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return PLANEX_OK;
  } catch (const planex::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return PLANEX_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PLANEX_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PLANEX_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return PLANEX_INTERNAL_ERROR;
  }
}

void check_pointers(bool ok) {
  planex::require(ok, planex::ErrorKind::InvalidArgument, "null pointer argument");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* planex_version(void) { return "0.1.0"; }

const char* planex_status_name(planex_status status) {
  switch (status) {
    case PLANEX_OK: return "ok";
    case PLANEX_INVALID_ARGUMENT: return "invalid argument";
    case PLANEX_PRECONDITION: return "precondition failed";
    case PLANEX_PARSE_ERROR: return "parse error";
    case PLANEX_BUDGET_EXCEEDED: return "budget exceeded";
    case PLANEX_UNSUPPORTED: return "unsupported";
    case PLANEX_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* planex_last_error(void) { return last_error.c_str(); }

void planex_string_free(char* s) { std::free(s); }

planex_status planex_graph_parse(const char* descriptor, planex_graph** out) {
  return guarded([&] {
    check_pointers(descriptor && out);
    *out = new planex_graph{planex::parse_graph_descriptor(descriptor)};
  });
}

planex_status planex_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count, planex_graph** out) {
  return guarded([&] {
    check_pointers(out && (edges || edge_count == 0));
    std::vector<planex::Edge> list;
    list.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) list.push_back({edges[2 * i], edges[2 * i + 1]});
    *out = new planex_graph{planex::Graph(n, list)};
  });
}

void planex_graph_free(planex_graph* g) { delete g; }

planex_status planex_graph_vertex_count(const planex_graph* g, size_t* out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = g->graph.vertex_count();
  });
}

planex_status planex_graph_edge_count(const planex_graph* g, size_t* out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = g->graph.edge_count();
  });
}

planex_status planex_graph_to_graph6(const planex_graph* g, char** out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = copy_string(planex::to_graph6(g->graph));
  });
}

planex_status planex_graph_to_json(const planex_graph* g, char** out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = copy_string(planex::graph_to_json(g->graph));
  });
}

planex_status planex_count_copies(const planex_graph* host, const planex_graph* pattern, uint64_t* out) {
  return guarded([&] {
    check_pointers(host && pattern && out);
    *out = planex::count_copies(host->graph, pattern->graph);
  });
}

planex_status planex_count_paths(const planex_graph* host, size_t vertices, uint64_t* out) {
  return guarded([&] {
    check_pointers(host && out);
    *out = planex::count_paths(host->graph, vertices);
  });
}

planex_status planex_count_cycles(const planex_graph* host, size_t vertices, uint64_t* out) {
  return guarded([&] {
    check_pointers(host && out);
    *out = planex::count_cycles(host->graph, vertices);
  });
}

planex_status planex_edge_orbit_count(const planex_graph* g, size_t* out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = planex::edge_orbits(g->graph).size();
  });
}

planex_status planex_gcl_member(const planex_graph* g, const char* c, int* member) {
  return guarded([&] {
    check_pointers(g && c && member);
    *member = planex::gcl_membership(g->graph, planex::parse_rational(c)).member ? 1 : 0;
  });
}

planex_status planex_mass_from_json(const char* json, planex_mass** out) {
  return guarded([&] {
    check_pointers(json && out);
    *out = new planex_mass{planex::float_mass_from_json(json)};
  });
}

planex_status planex_mass_uniform(const planex_graph* g, planex_mass** out) {
  return guarded([&] {
    check_pointers(g && out);
    *out = new planex_mass{planex::FloatMass::uniform_on(g->graph)};
  });
}

void planex_mass_free(planex_mass* mu) { delete mu; }

planex_status planex_mass_to_json(const planex_mass* mu, char** out) {
  return guarded([&] {
    check_pointers(mu && out);
    *out = copy_string(planex::mass_to_json(mu->mass));
  });
}

planex_status planex_eval_optp(const planex_mass* mu, size_t m, double* out) {
  return guarded([&] {
    check_pointers(mu && out);
    planex::require(m >= 2, planex::ErrorKind::InvalidArgument, "optp needs m >= 2");
    *out = planex::eval_optp(mu->mass, m);
  });
}

planex_status planex_eval_optb(const planex_mass* mu, const planex_graph* h, unsigned k, double* out) {
  return guarded([&] {
    check_pointers(mu && h && out);
    planex::require(k >= 1, planex::ErrorKind::InvalidArgument, "optb needs k >= 1");
    *out = planex::eval_optb(mu->mass, h->graph, k);
  });
}

planex_status planex_run_json(const char* request, char** response) {
  return guarded([&] {
    check_pointers(request && response);
    *response = copy_string(planex::run_request_string(request));
  });
}

planex_status planex_render_text(const char* response, char** out) {
  return guarded([&] {
    check_pointers(response && out);
    *out = copy_string(planex::render_response_text(nlohmann::json::parse(response)));
  });
}

}  // extern "C"
