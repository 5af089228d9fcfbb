#ifndef PLANISO_H
#define PLANISO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum PlanisoStatus {
  PLANISO_STATUS_OK = 0,
  PLANISO_STATUS_NULL_ARGUMENT = 1,
  PLANISO_STATUS_INVALID_UTF8 = 2,
  PLANISO_STATUS_PARSE_ERROR = 3,
  PLANISO_STATUS_INVALID_GRAPH = 4,
  PLANISO_STATUS_NOT_PLANAR = 5,
  PLANISO_STATUS_NOT_THREE_CONNECTED = 6,
  PLANISO_STATUS_RESOURCE_LIMIT = 7,
  PLANISO_STATUS_INTERNAL = 8,
} PlanisoStatus;

/**
 * Opaque graph handle.
 */
typedef struct PlanisoGraph PlanisoGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * call into the library on this thread; never null.
 */
const char *planiso_last_error(void);

/**
 * Parses a graph in the text file format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum PlanisoStatus planiso_graph_parse(const char *text, struct PlanisoGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `endpoints` must point to `2 * m` values (may be null when `m == 0`);
 * `out` must be writable.
 */
enum PlanisoStatus planiso_graph_from_edges(size_t n,
                                            const uint32_t *endpoints,
                                            size_t m,
                                            struct PlanisoGraph **out);

/**
 * Seeded stacked triangulation on `n >= 4` vertices.
 *
 * # Safety
 * `out` must be writable.
 */
enum PlanisoStatus planiso_gen_triangulation(size_t n, uint64_t seed, struct PlanisoGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void planiso_graph_free(struct PlanisoGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t planiso_graph_vertex_count(const struct PlanisoGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t planiso_graph_edge_count(const struct PlanisoGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlanisoStatus planiso_is_planar(const struct PlanisoGraph *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlanisoStatus planiso_is_3_connected(const struct PlanisoGraph *g, bool *out);

/**
 * Writes the contracted code (or the expanded code when `colored`) as a
 * newly allocated string to `out`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum PlanisoStatus planiso_canon(const struct PlanisoGraph *g,
                                 uint64_t seed,
                                 bool colored,
                                 char **out);

/**
 * Releases a string returned by the library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void planiso_string_free(char *s);

/**
 * Decides isomorphism. If `mapping` is non-null and the graphs are
 * isomorphic, `mapping[v]` receives the image of vertex `v` of `g1`; it must
 * have room for `vertex_count(g1)` entries.
 *
 * # Safety
 * `g1`, `g2` must be live handles; `out` must be writable; `mapping` must be
 * null or large enough.
 */
enum PlanisoStatus planiso_isomorphic(const struct PlanisoGraph *g1,
                                      const struct PlanisoGraph *g2,
                                      uint64_t seed,
                                      bool *out,
                                      uint32_t *mapping);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLANISO_H */
