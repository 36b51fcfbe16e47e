/* C API for the restricted optimal pebbling library.
 *
 * Conventions: every function returns an rpeb_status; results go through out
 * parameters. Graphs are opaque handles freed with rpeb_graph_free. Strings
 * returned through char** are heap-allocated and must be released with
 * rpeb_string_free. On failure rpeb_last_error() returns a thread-local
 * message describing the most recent error.
 */
#ifndef RPEBBLE_H
#define RPEBBLE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rpeb_graph rpeb_graph;

typedef enum rpeb_status {
    RPEB_OK = 0,
    RPEB_ERR_INVALID = 1,     /* bad argument / precondition violated */
    RPEB_ERR_PARSE = 2,       /* malformed input text */
    RPEB_ERR_UNSUPPORTED = 3, /* outside the supported envelope */
    RPEB_ERR_BUDGET = 4,      /* search budget exhausted */
    RPEB_ERR_LIMIT = 5,       /* hard resource limit hit */
    RPEB_ERR_INTERNAL = 6
} rpeb_status;

typedef struct rpeb_search_options {
    uint64_t node_budget;        /* generic reachability search, per target */
    uint64_t enumeration_budget; /* complete configurations per optimal-search call */
    uint64_t witness_limit;      /* stored optimal configurations */
    int32_t threads;
} rpeb_search_options;

void rpeb_search_options_init(rpeb_search_options* opts);

const char* rpeb_version(void);
const char* rpeb_last_error(void);
void rpeb_string_free(char* s);

/* ---- graph construction -------------------------------------------- */

/* pairs: 2*m ints, (u,v) per edge */
rpeb_status rpeb_graph_from_edges(int32_t n, const int32_t* pairs, int32_t m, rpeb_graph** out);
rpeb_status rpeb_graph_from_graph6(const char* text, rpeb_graph** out);
/* first line "n m", then m lines "u v"; '#' comments */
rpeb_status rpeb_graph_from_edge_text(const char* text, rpeb_graph** out);
/* "path:6", "spider:2,1,1", "alkane:3", "named:neopentane", "g6:...", or bare graph6 */
rpeb_status rpeb_graph_from_spec(const char* spec, rpeb_graph** out);
void rpeb_graph_free(rpeb_graph* g);

int32_t rpeb_graph_order(const rpeb_graph* g);
int32_t rpeb_graph_size(const rpeb_graph* g);
rpeb_status rpeb_graph_to_graph6(const rpeb_graph* g, char** out);
rpeb_status rpeb_graph_to_edge_text(const rpeb_graph* g, char** out);

/* ---- pebbling ------------------------------------------------------- */

/* config: n pebble counts. out_solvable: 0/1. */
rpeb_status rpeb_is_solvable(const rpeb_graph* g, const int32_t* config, uint64_t node_budget,
                             int32_t* out_solvable);

/* out_certificate_json (optional, may be NULL): {"target":v,"moves":[[u,v],...]} */
rpeb_status rpeb_reachable_to(const rpeb_graph* g, const int32_t* config, int32_t target,
                              uint64_t node_budget, int32_t* out_reachable,
                              char** out_certificate_json);

/* maximum pebbles deliverable to target on a tree */
rpeb_status rpeb_tree_max_to(const rpeb_graph* g, const int32_t* config, int32_t target,
                             int64_t* out_max);

/* out_valid: 0/1; out_failed_step: first illegal move index, -1 when valid */
rpeb_status rpeb_verify_certificate(const rpeb_graph* g, const int32_t* config,
                                    const char* certificate_json, int32_t* out_valid,
                                    int32_t* out_failed_step);

/* ---- optimal search -------------------------------------------------- */

/* t <= 0 requests the unrestricted optimal number pi*. */
rpeb_status rpeb_optimal_value(const rpeb_graph* g, int32_t t, const rpeb_search_options* opts,
                               int32_t* out_value, uint64_t* out_count);

/* Full result: {graph, t, value, count, witnesses, truncated, stats} */
rpeb_status rpeb_optimal_json(const rpeb_graph* g, int32_t t, const rpeb_search_options* opts,
                              char** out_json);

/* Solvability of config with optional per-target certificates. */
rpeb_status rpeb_solve_json(const rpeb_graph* g, const int32_t* config, int32_t certificates,
                            uint64_t node_budget, char** out_json);

/* Reachability of one target with certificate plus verification. */
rpeb_status rpeb_verify_json(const rpeb_graph* g, const int32_t* config, int32_t target,
                             uint64_t node_budget, char** out_json);

/* ---- domination ------------------------------------------------------ */

rpeb_status rpeb_domination_number(const rpeb_graph* g, int32_t* out);
rpeb_status rpeb_roman_domination_number(const rpeb_graph* g, int32_t* out);
rpeb_status rpeb_total_domination_number(const rpeb_graph* g, int32_t* out);
rpeb_status rpeb_bounds_json(const rpeb_graph* g, char** out_json);

/* ---- symmetry -------------------------------------------------------- */

rpeb_status rpeb_automorphism_order(const rpeb_graph* g, uint64_t* out);
rpeb_status rpeb_distinguishing_number(const rpeb_graph* g, int32_t* out);
/* trees only: labeled colorings preserved by no nontrivial automorphism */
rpeb_status rpeb_count_distinguishing_colorings(const rpeb_graph* g, int32_t r, uint64_t* out);
rpeb_status rpeb_symmetry_json(const rpeb_graph* g, char** out_json);

/* ---- reports --------------------------------------------------------- */

rpeb_status rpeb_family_json(const rpeb_search_options* opts, char** out_json);
/* suite: "alkanes" | "family" | "paths"; format: "json" | "csv" */
rpeb_status rpeb_reproduce(const char* suite, const char* format,
                           const rpeb_search_options* opts, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RPEBBLE_H */
