#ifndef INFLATA_H
#define INFLATA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Which argument backs a prediction.
typedef enum InflataBasis {
  INFLATA_BASIS_GENERIC = 1,
  INFLATA_BASIS_EVEN_FACTORS = 4,
  INFLATA_BASIS_FACTORS_PERFECT_MATCHING = 5,
  INFLATA_BASIS_PARITY_GAP = 7,
  INFLATA_BASIS_FACTORS_NEAR_PERFECT_MATCHING = 8,
} InflataBasis;

// Result code of every fallible call.
typedef enum InflataStatus {
  INFLATA_STATUS_OK = 0,
  INFLATA_STATUS_INVALID_INPUT = 1,
  INFLATA_STATUS_PARSE = 2,
  INFLATA_STATUS_INFEASIBLE = 3,
  INFLATA_STATUS_CAPACITY = 4,
  // The search budget ran out; the interval outputs are still filled in.
  INFLATA_STATUS_BUDGET = 5,
  INFLATA_STATUS_UNSUPPORTED = 6,
  INFLATA_STATUS_IO = 7,
  INFLATA_STATUS_NULL_POINTER = 8,
  INFLATA_STATUS_PANIC = 9,
} InflataStatus;

// Opaque graph handle.
typedef struct InflataGraph InflataGraph;

// A predicted value: exact when `lower == upper`.
typedef struct InflataPrediction {
  size_t lower;
  size_t upper;
  enum InflataBasis basis;
} InflataPrediction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *inflata_last_error(void);

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (it may be NULL
// when `edge_count` is 0) and `out` must be writable.
enum InflataStatus inflata_graph_new(size_t n,
                                     const uint32_t *edges,
                                     size_t edge_count,
                                     struct InflataGraph **out);

// Builds a graph from a family shorthand such as `kn:5` or `gpg:5,2`.
//
// # Safety
// `shorthand` must be a NUL-terminated string and `out` writable.
enum InflataStatus inflata_graph_from_family(const char *shorthand, struct InflataGraph **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `g` must come from one of the constructors and not be freed twice.
void inflata_graph_free(struct InflataGraph *g);

// Number of vertices, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t inflata_graph_order(const struct InflataGraph *g);

// Number of edges, or 0 for NULL.
//
// # Safety
// `g` must be NULL or a live handle.
size_t inflata_graph_size(const struct InflataGraph *g);

// Exact minimum size of a k-tuple total dominating set of the inflation.
//
// `max_nodes` of 0 selects the default budget. On `INFLATA_STATUS_BUDGET`
// the value lies in `[*lower, *upper]`; on success both equal the answer.
//
// # Safety
// `g` must be a live handle; `lower` and `upper` writable.
enum InflataStatus inflata_solve(const struct InflataGraph *g,
                                 size_t k,
                                 uint64_t max_nodes,
                                 size_t *lower,
                                 size_t *upper);

// Best closed-form bounds from the degree profile.
//
// # Safety
// `g` must be a live handle; `lower` and `upper` writable.
enum InflataStatus inflata_bounds(const struct InflataGraph *g,
                                  size_t k,
                                  size_t *lower,
                                  size_t *upper);

// Prediction from a factor/matching certificate search. `cap` limits the
// order of graphs searched exhaustively.
//
// # Safety
// `g` must be a live handle; `out` writable.
enum InflataStatus inflata_predict(const struct InflataGraph *g,
                                   size_t k,
                                   size_t cap,
                                   struct InflataPrediction *out);

// Closed-form value for a family shorthand. `*exact` is set to 0 when the
// value is only an upper bound.
//
// # Safety
// `shorthand` must be NUL-terminated; `value` and `exact` writable.
enum InflataStatus inflata_family_formula(const char *shorthand,
                                          size_t k,
                                          size_t *value,
                                          bool *exact);

// Library version as a static NUL-terminated string.
const char *inflata_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INFLATA_H */
