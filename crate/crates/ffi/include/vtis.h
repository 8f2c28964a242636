#ifndef VTIS_H
#define VTIS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum VtisStatus {
  VTIS_STATUS_OK = 0,
  /**
   * Malformed spec, bad argument or unreadable file.
   */
  VTIS_STATUS_ARGUMENT = 2,
  /**
   * A search budget was exhausted.
   */
  VTIS_STATUS_RESOURCE = 3,
  /**
   * A checked prediction disagreed with an exact computation.
   */
  VTIS_STATUS_VERIFICATION = 4,
  /**
   * A required pointer argument was null.
   */
  VTIS_STATUS_NULL_POINTER = 5,
  /**
   * The library panicked; this is a bug.
   */
  VTIS_STATUS_PANIC = 6,
} VtisStatus;

/**
 * Tri-state answer of [`vtis_primitivity`].
 */
typedef enum VtisPrimitivity {
  VTIS_PRIMITIVITY_PRIMITIVE = 0,
  VTIS_PRIMITIVITY_IMPRIMITIVE = 1,
  VTIS_PRIMITIVITY_UNKNOWN = 2,
} VtisPrimitivity;

/**
 * Opaque graph handle.
 */
typedef struct VtisGraph VtisGraph;

/**
 * Parses and evaluates a graph spec such as `"product(perm(3),circ(2,5))"`.
 * On success `*out` receives a handle to release with [`vtis_graph_free`].
 *
 * # Safety
 * `spec` must be a nul-terminated string and `out` a writable pointer.
 */
enum VtisStatus vtis_graph_from_spec(const char *spec, struct VtisGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `graph` must come from [`vtis_graph_from_spec`] and not be freed twice.
 */
void vtis_graph_free(struct VtisGraph *graph);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t vtis_graph_vertex_count(const struct VtisGraph *graph);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t vtis_graph_edge_count(const struct VtisGraph *graph);

/**
 * Independence number. A `budget` of 0 selects the default node budget.
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer.
 */
enum VtisStatus vtis_alpha(const struct VtisGraph *graph, uint64_t budget, size_t *out);

/**
 * Vertex-transitivity, from the constructor certificate or by search.
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer.
 */
enum VtisStatus vtis_is_vertex_transitive(const struct VtisGraph *graph, bool *out);

/**
 * IS-primitivity of a vertex-transitive graph. An exhausted budget yields
 * [`VtisPrimitivity::Unknown`] with status `Ok`.
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer.
 */
enum VtisStatus vtis_primitivity(const struct VtisGraph *graph,
                                 uint64_t budget,
                                 enum VtisPrimitivity *out);

/**
 * All maximum independent sets as `{"alpha":..,"count":..,"sets":[[..],..]}`.
 *
 * # Safety
 * `graph` must be a live handle and `out` a writable pointer. The string
 * written to `*out` must be released with [`vtis_string_free`].
 */
enum VtisStatus vtis_mis_json(const struct VtisGraph *graph, uint64_t budget, char **out);

/**
 * Normality classification of `g × h` as JSON.
 *
 * # Safety
 * `g` and `h` must be live handles and `out` a writable pointer. The
 * string written to `*out` must be released with [`vtis_string_free`].
 */
enum VtisStatus vtis_check_normal_json(const struct VtisGraph *g,
                                       const struct VtisGraph *h,
                                       uint64_t budget,
                                       char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void vtis_string_free(char *s);

/**
 * Message for the most recent failure on the calling thread, or null.
 * The pointer stays valid until the next failing call on that thread.
 */
const char *vtis_last_error_message(void);

#endif  /* VTIS_H */
