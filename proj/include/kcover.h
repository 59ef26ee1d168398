#ifndef KCOVER_H
#define KCOVER_H

/* C interface to the embedding engine, obstruction generator, covering
 * search, and certificate tooling. Every fallible call returns a
 * kc_status; on KC_ERROR or KC_MALFORMED, kc_last_error() holds a
 * message for the calling thread. Strings returned through char** out
 * parameters are heap-allocated; release them with kc_string_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
    KC_OK = 0,
    KC_ERROR = 1,     /* invalid input or internal failure; see kc_last_error */
    KC_MALFORMED = 2  /* file did not parse as a certificate */
} kc_status;

typedef struct kc_graph kc_graph;
typedef struct kc_engine kc_engine;

/* Library version, static storage. */
const char* kc_version(void);

/* Message for this thread's most recent failure, static storage. Empty
 * string when nothing failed yet. */
const char* kc_last_error(void);

void kc_string_free(char* s);

/* Parse a graph from the construction grammar (K5, C7, K3,3, K8-K2,
 * K8-(K1,2u2K2), ...) or from graph6. Returns NULL on failure. */
kc_graph* kc_graph_parse(const char* text);
void kc_graph_free(kc_graph* g);
int kc_graph_order(const kc_graph* g);
int kc_graph_edge_count(const kc_graph* g);
kc_status kc_graph_to_graph6(const kc_graph* g, char** out);

/* use_cache_dir != 0 honors KCOVER_CACHE_DIR as the memo spill file
 * directory. The engine is not safe for concurrent use; create one per
 * thread. */
kc_engine* kc_engine_new(int use_cache_dir);
void kc_engine_free(kc_engine* e);

/* Search nodes explored by this engine so far. */
uint64_t kc_engine_nodes(const kc_engine* e);

/* Surfaces are named sphere, torus, or s<g> / n<k> for the orientable
 * genus-g and nonorientable genus-k surfaces. */
kc_status kc_embeds(kc_engine* e, const kc_graph* g, const char* surface, int* out_embeds);
kc_status kc_orientable_genus(kc_engine* e, const kc_graph* g, int* out_genus);
kc_status kc_nonorientable_genus(kc_engine* e, const kc_graph* g, int* out_genus,
                                 int* out_planar);

/* Edge-deletion minimality: *out_is is 1 when g fails the surface and
 * every single-edge deletion embeds. */
kc_status kc_is_obstruction(kc_engine* e, const kc_graph* g, const char* surface,
                            int* out_is);

/* Progress after each finished edge level of a generation sweep. */
typedef void (*kc_progress_fn)(int edges, uint64_t classes, uint64_t candidates,
                               uint64_t found, void* user);

/* Generate every obstruction of the given order for the surface and
 * write <out_dir>/obstructions-<surface>-o<order>.g6 plus a .json
 * metadata sidecar. checkpoint_dir NULL disables level checkpointing;
 * jobs < 2 keeps the sweep single-threaded. Orders 4 through 9 are
 * supported. */
kc_status kc_generate_obstructions(int order, const char* surface, const char* out_dir,
                                   const char* checkpoint_dir, int jobs,
                                   kc_progress_fn progress, void* user,
                                   uint64_t* out_count);

typedef enum kc_cover_status {
    KC_COVER_FOUND = 0,
    KC_COVER_NONE = 1,     /* exhaustive: no covering exists */
    KC_COVER_UNDECIDED = 2 /* member pool hit pool_limit before a hit */
} kc_cover_status;

/* Search for gtilde+1 Kuratowski subgraphs covering g whose pair unions
 * fail N1 and whose triple unions fail the gtilde-dependent surfaces.
 * On KC_COVER_FOUND the certificate JSON is written to cert_path with
 * host_name recorded as the host's display name. pool_limit 0 uses the
 * default cap. */
kc_status kc_find_covering(const kc_graph* g, const char* host_name, int gtilde,
                           const char* cert_path, uint64_t pool_limit, int* out_status,
                           int* out_members);

/* Re-verify a certificate against a cold engine. On KC_OK, *out_pass is
 * 1/0 and *out_detail names the first violated condition (arity,
 * members, coverage, pair-embeds, triple-embeds, recorded-results) or
 * says "pass". Files that do not parse yield KC_MALFORMED. */
kc_status kc_verify_certificate(const char* cert_path, int* out_pass, char** out_detail);

/* Write DOT diagrams for a certificate into out_dir: member-<i>.dot
 * (host with the member bold and its branch vertices doubled) plus
 * pair-<i>-<j>.dot and triple-<i>-<j>-<k>.dot union graphs. */
kc_status kc_certificate_dot(const char* cert_path, const char* out_dir, int* out_files);

/* Acceptance criteria. Ids run 1..9; suites are quick {1,2,3},
 * order8 {4,5,6,7}, full {8,9}. */
kc_status kc_suite_criteria(const char* suite, int out_ids[9], int* out_count);

typedef void (*kc_log_fn)(const char* line, void* user);

/* Run one criterion. Certificates and checkpoints land under work_dir
 * (NULL or "" for a system temp subdirectory); log receives progress
 * lines (may be NULL); jobs as in kc_generate_obstructions. On KC_OK,
 * *out_pass is 1/0, *out_seconds the wall time, *out_tier and
 * *out_summary the tier name and one-line result. */
kc_status kc_run_criterion(int id, const char* work_dir, int jobs, kc_log_fn log,
                           void* user, int* out_pass, double* out_seconds,
                           char** out_tier, char** out_summary);

#ifdef __cplusplus
}
#endif

#endif
