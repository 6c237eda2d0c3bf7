#ifndef KWAYCUT_KWAYCUT_H
#define KWAYCUT_KWAYCUT_H

#include <stddef.h>
#include <stdint.h>

#if defined(KWC_BUILDING_LIBRARY)
#define KWC_API __attribute__((visibility("default")))
#else
#define KWC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Vertex and edge ids are 0-based. Edge ids follow insertion order. */

typedef struct kwc_graph kwc_graph;
typedef struct kwc_embedding kwc_embedding;
typedef struct kwc_result kwc_result;
typedef struct kwc_table kwc_table;

typedef enum {
  KWC_OK = 0,
  KWC_ERR_INPUT = 1,
  KWC_ERR_INTERNAL = 2
} kwc_status;

typedef enum {
  KWC_SOLVER_ORACLE = 0,
  KWC_SOLVER_FPT = 1,
  KWC_SOLVER_DP = 2,
  KWC_SOLVER_PLANAR = 3
} kwc_solver;

typedef enum {
  KWC_PROFILE_PAPER = 0,
  KWC_PROFILE_TIGHT = 1,
  KWC_PROFILE_CUSTOM = 2
} kwc_profile_mode;

typedef enum {
  KWC_FOUND = 0,
  KWC_INFEASIBLE = 1,
  KWC_PIGEONHOLE = 2
} kwc_outcome;

typedef struct {
  kwc_solver solver;
  int k;
  int s;                     /* < 0: derive a bound */
  long long enum_budget;     /* < 0: library default */
  kwc_profile_mode profile;
  uint64_t custom[5];        /* t, p, q, d, h for KWC_PROFILE_CUSTOM; 0 derives the value */
  int jobs;
  const char* decomposition; /* optional tree decomposition text for KWC_SOLVER_DP */
} kwc_options;

KWC_API void kwc_options_init(kwc_options* opts);

/* Message of the last failed call on this thread. */
KWC_API const char* kwc_last_error(void);

KWC_API kwc_status kwc_graph_create(size_t vertices, kwc_graph** out);
KWC_API kwc_status kwc_graph_add_edge(kwc_graph* g, uint32_t u, uint32_t v, uint32_t* edge_out);
KWC_API kwc_status kwc_graph_parse(const char* text, size_t len, kwc_graph** out);
/* The returned string is released with kwc_string_free. */
KWC_API kwc_status kwc_graph_serialize(const kwc_graph* g, char** text_out);
KWC_API size_t kwc_graph_vertex_count(const kwc_graph* g);
KWC_API size_t kwc_graph_edge_count(const kwc_graph* g);
KWC_API int kwc_graph_is_connected(const kwc_graph* g);
KWC_API void kwc_graph_free(kwc_graph* g);
KWC_API void kwc_string_free(char* s);

/* embedding_out may be NULL; it is set to NULL for kinds without one. */
KWC_API kwc_status kwc_generate(const char* kind, const long long* params, size_t nparams, uint64_t seed,
                                kwc_graph** graph_out, kwc_embedding** embedding_out);

KWC_API kwc_status kwc_embedding_parse(const kwc_graph* g, const char* text, size_t len, kwc_embedding** out);
KWC_API kwc_status kwc_embedding_serialize(const kwc_embedding* e, char** text_out);
KWC_API void kwc_embedding_free(kwc_embedding* e);

/* Heuristic (min-fill) tree decomposition in text form. */
KWC_API kwc_status kwc_decompose(const kwc_graph* g, char** text_out);

/* embedding may be NULL unless the planar solver is selected. */
KWC_API kwc_status kwc_solve(const kwc_graph* g, const kwc_embedding* embedding, const kwc_options* opts,
                             kwc_result** out);
/* pairs holds 2*npairs vertex ids. */
KWC_API kwc_status kwc_pair_cut(const kwc_graph* g, const uint32_t* pairs, size_t npairs, const kwc_options* opts,
                                kwc_result** out);
KWC_API kwc_status kwc_verify_cut(const kwc_graph* g, const uint32_t* edges, size_t nedges, int k, int s, int* ok);

KWC_API kwc_outcome kwc_result_outcome(const kwc_result* r);
KWC_API int kwc_result_bound(const kwc_result* r);
KWC_API size_t kwc_result_size(const kwc_result* r);
KWC_API const uint32_t* kwc_result_edges(const kwc_result* r);
KWC_API uint64_t kwc_result_micros(const kwc_result* r);
KWC_API int kwc_result_verified(const kwc_result* r);
KWC_API const char* kwc_result_solver(const kwc_result* r);
KWC_API const char* kwc_result_profile(const kwc_result* r);
/* Engine counters by name ("layerings", "fallbacks", ...) and "max_class_width". */
KWC_API kwc_status kwc_result_stat(const kwc_result* r, const char* name, long long* value);
KWC_API void kwc_result_free(kwc_result* r);

/* Powercut table of a connected graph for the given terminals. */
KWC_API kwc_status kwc_powercut(const kwc_graph* g, const uint32_t* terminals, size_t nterminals,
                                const kwc_options* opts, kwc_table** out);
KWC_API size_t kwc_table_entry_count(const kwc_table* t);
/* labels has nterminals entries; edges is NULL and nedges 0 for keys without a cut. */
KWC_API kwc_status kwc_table_entry(const kwc_table* t, size_t index, int* j, const uint8_t** labels, int* feasible,
                                   const uint32_t** edges, size_t* nedges);
KWC_API void kwc_table_free(kwc_table* t);

#ifdef __cplusplus
}
#endif

#endif
