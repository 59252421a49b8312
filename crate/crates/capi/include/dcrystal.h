#ifndef DCRYSTAL_H
#define DCRYSTAL_H

/* Generated by cbindgen from dcrystal-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every fallible call.
 */
typedef enum DcrStatus {
  DCR_STATUS_OK = 0,
  DCR_STATUS_NULL_POINTER = 1,
  DCR_STATUS_INVALID_UTF8 = 2,
  DCR_STATUS_PARSE_ERROR = 3,
  DCR_STATUS_INVALID_ARGUMENT = 4,
  DCR_STATUS_INTERNAL_ERROR = 5,
} DcrStatus;

/**
 * Insertion direction selector.
 */
typedef enum DcrDirection {
  DCR_DIRECTION_SOUTHEAST = 0,
  DCR_DIRECTION_NORTHWEST = 1,
} DcrDirection;

/**
 * Which realization of the level-`s` crystal graph to export.
 */
typedef enum DcrGraphSide {
  DCR_GRAPH_SIDE_LUSZTIG = 0,
  DCR_GRAPH_SIDE_TABLEAU = 1,
} DcrGraphSide;

/**
 * Opaque handle to a triangle datum.
 */
typedef struct DcrDatum DcrDatum;

/**
 * Opaque handle to a semistandard tableau.
 */
typedef struct DcrTableau DcrTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *dcr_version(void);

/**
 * Message of the most recent error on this thread; caller frees it.
 * Returns null when no error has been recorded.
 */
char *dcr_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `ptr` must have been produced by this library and not freed before.
 */
void dcr_string_free(char *ptr);

/**
 * Parses triangle rows like `[[2],[1,0],[1,2,1],[2,1,0,1]]`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum DcrStatus dcr_datum_parse_triangle(const char *text, struct DcrDatum **out);

/**
 * # Safety
 * `d` must come from this library and not be freed twice.
 */
void dcr_datum_free(struct DcrDatum *d);

/**
 * Rank of the datum, or 0 for a null handle.
 *
 * # Safety
 * `d` must be a live handle or null.
 */
uint32_t dcr_datum_rank(const struct DcrDatum *d);

/**
 * Renders the triangle rows back to text.
 *
 * # Safety
 * `d` and `out` must be valid pointers.
 */
enum DcrStatus dcr_datum_to_triangle(const struct DcrDatum *d, char **out);

/**
 * The maximal double-path sum of the datum.
 *
 * # Safety
 * `d` and `out` must be valid pointers.
 */
enum DcrStatus dcr_datum_epsilon_star(const struct DcrDatum *d, uint64_t *out);

/**
 * Writes the tableau shape of the datum into `buf` (capacity `cap`); the
 * true length lands in `len_out` even when it exceeds the capacity.
 *
 * # Safety
 * `buf` must point to at least `cap` slots; `d` and `len_out` must be valid.
 */
enum DcrStatus dcr_datum_shape(const struct DcrDatum *d,
                               uint64_t *buf,
                               uintptr_t cap,
                               uintptr_t *len_out);

/**
 * Inserts the datum into a tableau in the requested direction.
 *
 * # Safety
 * `d` and `out` must be valid pointers.
 */
enum DcrStatus dcr_datum_insert(const struct DcrDatum *d,
                                enum DcrDirection direction,
                                struct DcrTableau **out);

/**
 * # Safety
 * `t` must come from this library and not be freed twice.
 */
void dcr_tableau_free(struct DcrTableau *t);

/**
 * JSON rendering of the tableau (rows padded with null for the offsets).
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum DcrStatus dcr_tableau_to_json(const struct DcrTableau *t, char **out);

/**
 * Parses tableau JSON; `rank` bounds the letters (pass 0 to infer).
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be valid.
 */
enum DcrStatus dcr_tableau_parse_json(const char *text, uint32_t rank, struct DcrTableau **out);

/**
 * Recovers the datum from a tableau (inverse of the insertion).
 *
 * # Safety
 * `t` and `out` must be valid pointers.
 */
enum DcrStatus dcr_tableau_invert(const struct DcrTableau *t,
                                  enum DcrDirection direction,
                                  struct DcrDatum **out);

/**
 * DOT export of the level-`s` crystal graph.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum DcrStatus dcr_graph_dot(uint32_t n, uint64_t s, enum DcrGraphSide side, char **out);

/**
 * Runs a verification suite; `passed_out` reports the verdict and the JSON
 * report lands in `report_out`.
 *
 * # Safety
 * `suite` must be NUL-terminated; the out pointers must be valid.
 */
enum DcrStatus dcr_verify(const char *suite,
                          uint32_t n,
                          uint64_t s,
                          uint32_t bound,
                          uint64_t seed,
                          uint32_t jobs,
                          bool *passed_out,
                          char **report_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DCRYSTAL_H */
