/* C interface to the cyclewidth library.
 *
 * Graphs are opaque handles. Every fallible call returns a cw_status; on
 * anything other than CW_OK, cw_last_error() describes the failure for the
 * calling thread until its next call into the library. Strings returned
 * through char** are heap-allocated and released with cw_string_free.
 * Vertex ids are 0-based except inside PACE bodies, which are 1-based.
 */
#ifndef CYCLEWIDTH_H
#define CYCLEWIDTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CW_API __declspec(dllexport)
#else
#define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cw_graph cw_graph;

typedef enum cw_status {
  CW_OK = 0,
  CW_INVALID_ARGUMENT = 1,
  CW_PARSE_ERROR = 2,
  CW_BUDGET_EXCEEDED = 3,
  CW_PRECONDITION_VIOLATED = 4,
  CW_THEOREM_VIOLATION = 5,
  CW_VERIFY_FAILED = 6,
  CW_INTERNAL_ERROR = 7
} cw_status;

typedef enum cw_format { CW_FORMAT_GRAPH6 = 0, CW_FORMAT_PACE_GR = 1 } cw_format;

/* Default search-node budget; pass 0 to any budget parameter to use it. */
#define CW_DEFAULT_BUDGET UINT64_C(100000000)

CW_API const char* cw_last_error(void);
CW_API const char* cw_status_name(cw_status status);
CW_API void cw_string_free(char* s);

/* Graph handles. */
CW_API cw_status cw_graph_from_edges(int n, const int* endpoints, size_t edge_count, cw_graph** out);
CW_API cw_status cw_graph_parse(cw_format format, const char* text, size_t len, cw_graph** out);
CW_API cw_status cw_graph_serialize(const cw_graph* g, cw_format format, char** out);
/* `family` is a space-separated family name and parameters, e.g. "grid 3 4". */
CW_API cw_status cw_graph_generate(const char* family, uint64_t seed, cw_graph** out);
CW_API void cw_graph_free(cw_graph* g);
CW_API int cw_graph_order(const cw_graph* g);
CW_API size_t cw_graph_size(const cw_graph* g);
/* Writes up to `capacity` edges as endpoint pairs; returns the edge count. */
CW_API size_t cw_graph_edges(const cw_graph* g, int* endpoints, size_t capacity);

/* Exact treewidth; `exact` is 0 when the budget ran out and `width` is only an
 * upper bound. `td` receives a PACE .td body. */
CW_API cw_status cw_treewidth(const cw_graph* g, uint64_t budget, int* width, int* exact, char** td);

/* Maximum packing of disjoint cycles of length >= ell; one cycle per line. */
CW_API cw_status cw_pack(const cw_graph* g, int ell, uint64_t budget, int* size, char** cycles);

/* Lexicographically smallest minimum vertex set meeting every cycle of
 * length >= ell; space-separated ids. */
CW_API cw_status cw_hit(const cw_graph* g, int ell, uint64_t budget, int* size, char** ids);

/* `spec` is a comma-separated list of cycle lengths, e.g. "5,3,3". On a hit,
 * `found` is 1 and `cycles` holds one cycle per spec entry. */
CW_API cw_status cw_minor(const cw_graph* g, const char* spec, uint64_t budget, int* found, char** cycles);

/* Minor certificate or bounded-width tree decomposition, as certificate text. */
CW_API cw_status cw_decompose(const cw_graph* g, const char* spec, uint64_t budget, char** certificate);

/* CW_OK when the certificate is valid, CW_VERIFY_FAILED otherwise. */
CW_API cw_status cw_verify_outcome(const cw_graph* g, const char* spec, const char* certificate);
CW_API cw_status cw_validate_td(const cw_graph* g, const char* td);

/* K_{h-1} lower-bound witness; `ok` is 1 when it has no spec minor and
 * treewidth exactly h - 2. */
CW_API cw_status cw_witness(const char* spec, uint64_t budget, int* ok, char** report);

/* Runs the duality sweep; `spec` may be NULL for [ell, ell]. `messages`
 * (optional) receives one line per violation. */
CW_API cw_status cw_sweep(const char* corpus, const int* ells, size_t ell_count, const char* spec, const char* out_path,
                          uint64_t budget, uint64_t seed, int* rows, int* budget_rows, int* violations, char** messages);
CW_API cw_status cw_verify_sweep(const char* csv_path, uint64_t budget, int* rows, int* violations, char** messages);

CW_API cw_status cw_girth_demo(const int* sizes, size_t size_count, const uint64_t* seeds, size_t seed_count,
                               uint64_t budget, char** csv);

CW_API cw_status cw_ep_bound(int64_t k, int64_t ell, int64_t* out);
CW_API cw_status cw_ep_bound_no_medium(int64_t k, int64_t* out);
CW_API cw_status cw_g_bound(int64_t h, int64_t k, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif
