#ifndef CPPT_H
#define CPPT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CpptStatus {
  CPPT_STATUS_OK = 0,
  CPPT_STATUS_NULL_POINTER = 1,
  /**
   * Input string is not UTF-8.
   */
  CPPT_STATUS_UTF8 = 2,
  /**
   * Malformed document.
   */
  CPPT_STATUS_PARSE = 3,
  /**
   * Graph violates an axiom.
   */
  CPPT_STATUS_INVALID = 4,
  /**
   * Flip not possible.
   */
  CPPT_STATUS_FLIP = 5,
  /**
   * Sequence construction failed.
   */
  CPPT_STATUS_CANON = 6,
  /**
   * Argument out of range.
   */
  CPPT_STATUS_ARGUMENT = 7,
} CpptStatus;

/**
 * Opaque graph handle.
 */
typedef struct CpptGraph CpptGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Valid until the
 * next failing call on the same thread; do not free.
 */
const char *cppt_last_error(void);

/**
 * Parses a graph document. The graph is not validated; see
 * [`cppt_graph_is_valid`].
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CpptStatus cppt_graph_from_json(const char *json, struct CpptGraph **out);

/**
 * The canonical graph on `n >= 3` vertices.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum CpptStatus cppt_graph_canonical(size_t n, struct CpptGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from this library not yet freed.
 */
void cppt_graph_free(struct CpptGraph *g);

/**
 * Serializes a graph; free the result with [`cppt_string_free`].
 * Returns NULL for a NULL handle.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
char *cppt_graph_to_json(const struct CpptGraph *g);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void cppt_string_free(char *s);

/**
 * Vertex count, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cppt_graph_vertex_count(const struct CpptGraph *g);

/**
 * Edge count, 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
size_t cppt_graph_edge_count(const struct CpptGraph *g);

/**
 * `Ok` if every axiom holds, `Invalid` (with the violations as the error
 * message) otherwise.
 *
 * # Safety
 * `g` must be NULL or a live handle.
 */
enum CpptStatus cppt_graph_is_valid(const struct CpptGraph *g);

/**
 * Flips edge `u v` into `a b`, writing a new handle to `out`. The input is
 * left unchanged.
 *
 * # Safety
 * `g` must be a live handle and `out` a writable pointer.
 */
enum CpptStatus cppt_graph_flip(const struct CpptGraph *g,
                                size_t u,
                                size_t v,
                                size_t a,
                                size_t b,
                                struct CpptGraph **out);

/**
 * Flip sequence from `a` to `b` as a sequence document; `labeled = false`
 * accepts any interior relabeling of `b`. Free the result with
 * [`cppt_string_free`]. `len`, if not NULL, receives the number of flips.
 *
 * # Safety
 * `a` and `b` must be live handles, `out` writable, `len` NULL or writable.
 */
enum CpptStatus cppt_flip_sequence(const struct CpptGraph *a,
                                   const struct CpptGraph *b,
                                   bool labeled,
                                   char **out,
                                   size_t *len);

/**
 * Replays a sequence document, validating every intermediate graph, and
 * writes the endpoint to `out`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum CpptStatus cppt_sequence_verify(const char *json, struct CpptGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CPPT_H */
