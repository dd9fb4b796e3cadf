#ifndef PLANEX_PLANEX_H
#define PLANEX_PLANEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(PLANEX_BUILDING_LIBRARY)
#define PLANEX_API __attribute__((visibility("default")))
#else
#define PLANEX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum planex_status {
  PLANEX_OK = 0,
  PLANEX_INVALID_ARGUMENT = 1,
  PLANEX_PRECONDITION = 2,
  PLANEX_PARSE_ERROR = 3,
  PLANEX_BUDGET_EXCEEDED = 4,
  PLANEX_UNSUPPORTED = 5,
  PLANEX_INTERNAL_ERROR = 6
} planex_status;

typedef struct planex_graph planex_graph;
typedef struct planex_mass planex_mass;

PLANEX_API const char* planex_version(void);
PLANEX_API const char* planex_status_name(planex_status status);
/* Message of the last failed call on this thread; empty after a success. */
PLANEX_API const char* planex_last_error(void);

/* Strings returned through char** are owned by the caller. */
PLANEX_API void planex_string_free(char* s);

/* Graphs: descriptors such as "C6", "K2,7", "blowup(K3,2)", "g6:<body>" or a JSON edge list. */
PLANEX_API planex_status planex_graph_parse(const char* descriptor, planex_graph** out);
/* edges holds 2 * edge_count vertex indices. */
PLANEX_API planex_status planex_graph_from_edges(size_t n, const uint32_t* edges, size_t edge_count,
                                                 planex_graph** out);
PLANEX_API void planex_graph_free(planex_graph* g);
PLANEX_API planex_status planex_graph_vertex_count(const planex_graph* g, size_t* out);
PLANEX_API planex_status planex_graph_edge_count(const planex_graph* g, size_t* out);
PLANEX_API planex_status planex_graph_to_graph6(const planex_graph* g, char** out);
PLANEX_API planex_status planex_graph_to_json(const planex_graph* g, char** out);

PLANEX_API planex_status planex_count_copies(const planex_graph* host, const planex_graph* pattern,
                                             uint64_t* out);
PLANEX_API planex_status planex_count_paths(const planex_graph* host, size_t vertices, uint64_t* out);
PLANEX_API planex_status planex_count_cycles(const planex_graph* host, size_t vertices, uint64_t* out);
PLANEX_API planex_status planex_edge_orbit_count(const planex_graph* g, size_t* out);
/* c is an integer or "p/q"; *member is 1 or 0. */
PLANEX_API planex_status planex_gcl_member(const planex_graph* g, const char* c, int* member);

/* Masses: JSON {"ground": n, "weights": [[u, v, w], ...]}. */
PLANEX_API planex_status planex_mass_from_json(const char* json, planex_mass** out);
PLANEX_API planex_status planex_mass_uniform(const planex_graph* g, planex_mass** out);
PLANEX_API void planex_mass_free(planex_mass* mu);
PLANEX_API planex_status planex_mass_to_json(const planex_mass* mu, char** out);
PLANEX_API planex_status planex_eval_optp(const planex_mass* mu, size_t m, double* out);
PLANEX_API planex_status planex_eval_optb(const planex_mass* mu, const planex_graph* h, unsigned k,
                                          double* out);

/* Runs a JSON request ({"command": "optimize" | "certify" | "verify" | "table" |
   "count" | "oracle", ...}) and returns the JSON response. */
PLANEX_API planex_status planex_run_json(const char* request, char** response);
/* Renders a response from planex_run_json as plain text. */
PLANEX_API planex_status planex_render_text(const char* response, char** out);

#ifdef __cplusplus
}
#endif

#endif
