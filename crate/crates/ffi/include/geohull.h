#ifndef GEOHULL_H
#define GEOHULL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum GhStatus {
  GH_STATUS_OK = 0,
  GH_STATUS_NULL_POINTER = 1,
  GH_STATUS_PARSE = 2,
  GH_STATUS_IO = 3,
  GH_STATUS_VERTEX_OUT_OF_RANGE = 4,
  GH_STATUS_UNKNOWN_LABEL = 5,
  GH_STATUS_NOT_CONNECTED = 6,
  GH_STATUS_NOT_OUTERPLANAR = 7,
  GH_STATUS_INVALID_ARGUMENT = 8,
  GH_STATUS_NO_FIXED_POINT = 9,
  GH_STATUS_PANIC = 10,
} GhStatus;

// Opaque undirected graph.
typedef struct GhGraph GhGraph;

// Opaque sampled outerplanar spanning subgraph, ready for closures.
typedef struct GhOuterplanar GhOuterplanar;

// Core settings. `gh_core_config_default` fills in the usual values.
typedef struct GhCoreConfig {
  size_t k;
  size_t l;
  size_t num_subgraphs;
  double threshold;
  size_t max_iterations;
  uint64_t seed;
} GhCoreConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until
// the next call.
const char *gh_last_error(void);

// Library version, static string.
const char *gh_version(void);

// Builds a graph on vertices `0..n` from `m` pairs stored flat in
// `edges` (`2*m` entries). Loops and repeated pairs are dropped.
//
// # Safety
// `edges` must point to `2*m` readable values (may be NULL if `m` is 0);
// `out` must be writable.
enum GhStatus gh_graph_from_edges(size_t n, const uint32_t *edges, size_t m, struct GhGraph **out);

// Reads a whitespace-separated edge list ('#' starts a comment line).
// With `largest_only` set, keeps the largest connected component.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum GhStatus gh_graph_read(const char *path, bool largest_only, struct GhGraph **out);

// # Safety
// `g` must come from this library and not be used afterwards.
void gh_graph_free(struct GhGraph *g);

// # Safety
// `g` must be a live handle or NULL (returns 0).
size_t gh_graph_vertex_count(const struct GhGraph *g);

// # Safety
// `g` must be a live handle or NULL (returns 0).
size_t gh_graph_edge_count(const struct GhGraph *g);

// Original label of dense vertex `v`.
//
// # Safety
// `g` must be a live handle, `label` writable.
enum GhStatus gh_graph_label(const struct GhGraph *g, size_t v, uint64_t *label);

// Geodesic closure of the vertices marked in `in_mask`, written to
// `out_mask`. Both masks have `n` bytes.
//
// # Safety
// `g` must be a live handle; masks must span `n` bytes.
enum GhStatus gh_closure_exact(const struct GhGraph *g, const uint8_t *in_mask, uint8_t *out_mask);

// Vertices lying in the closure within at least `threshold` percent of
// `num_subgraphs` sampled outerplanar subgraphs.
//
// # Safety
// As for [`gh_closure_exact`].
enum GhStatus gh_closure_approx(const struct GhGraph *g,
                                const uint8_t *in_mask,
                                size_t num_subgraphs,
                                double threshold,
                                uint64_t seed,
                                uint8_t *out_mask);

// Samples an outerplanar spanning subgraph of a connected graph.
//
// # Safety
// `g` must be a live handle; `out` writable.
enum GhStatus gh_sample_outerplanar(const struct GhGraph *g,
                                    uint64_t seed,
                                    struct GhOuterplanar **out);

// # Safety
// `h` must come from this library and not be used afterwards.
void gh_outerplanar_free(struct GhOuterplanar *h);

// # Safety
// `h` must be a live handle or NULL (returns 0).
size_t gh_outerplanar_edge_count(const struct GhOuterplanar *h);

// Maximum number of interior faces over the blocks.
//
// # Safety
// `h` must be a live handle or NULL (returns 0).
size_t gh_outerplanar_face_number(const struct GhOuterplanar *h);

// Closure inside the sampled subgraph.
//
// # Safety
// `h` must be a live handle; masks must span `n` bytes.
enum GhStatus gh_outerplanar_closure(const struct GhOuterplanar *h,
                                     const uint8_t *in_mask,
                                     uint8_t *out_mask);

struct GhCoreConfig gh_core_config_default(void);

// Core from exact closures. `iterations` may be NULL.
//
// # Safety
// `g` and `config` must be valid; `out_mask` must span `n` bytes.
enum GhStatus gh_core_exact(const struct GhGraph *g,
                            const struct GhCoreConfig *config,
                            uint8_t *out_mask,
                            size_t *iterations);

// Core from ensemble-approximated closures. `iterations` may be NULL.
//
// # Safety
// As for [`gh_core_exact`].
enum GhStatus gh_core_approx(const struct GhGraph *g,
                             const struct GhCoreConfig *config,
                             uint8_t *out_mask,
                             size_t *iterations);

// Jaccard similarity of two masks of length `n` (1 for two empty sets).
//
// # Safety
// Masks must span `n` bytes; `out` writable.
enum GhStatus gh_jaccard(const uint8_t *a, const uint8_t *b, size_t n, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GEOHULL_H */
