/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TROPCONV_H
#define TROPCONV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Domain errors mirror the library's error kinds.
 */
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_NULL_POINTER = 1,
  TC_STATUS_INVALID_UTF8 = 2,
  TC_STATUS_PARSE = 3,
  TC_STATUS_EMPTY_INPUT = 10,
  TC_STATUS_DIMENSION_MISMATCH = 11,
  TC_STATUS_COEFFICIENT_NORMALIZATION = 12,
  TC_STATUS_INDEX_OUT_OF_RANGE = 13,
  TC_STATUS_ZERO_VECTOR = 14,
  TC_STATUS_ZERO_NORMAL = 15,
  TC_STATUS_NOT_LINEAR = 16,
  TC_STATUS_NOT_SQUARE = 17,
  TC_STATUS_TOO_LARGE = 18,
  TC_STATUS_LINEALITY_DIRECTION = 19,
  TC_STATUS_NOT_BALANCED = 20,
  TC_STATUS_NOT_TWO_DIMENSIONAL = 21,
  TC_STATUS_PANIC = 99,
} TcStatus;

/**
 * A finite union of polyhedra.
 */
typedef struct TcComplex TcComplex;

/**
 * A fan tropical curve.
 */
typedef struct TcCurve TcCurve;

/**
 * A matrix over the rationals, read tropically.
 */
typedef struct TcMatrix TcMatrix;

/**
 * A polyhedron in R^n.
 */
typedef struct TcPolyhedron TcPolyhedron;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *tc_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and must not be used afterwards.
 */
void tc_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *tc_version(void);

/**
 * Reads a polyhedron from its JSON form (H- or V-representation).
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_polyhedron_from_json(const char *json, struct TcPolyhedron **out_p);

/**
 * Convex hull of a JSON list of points.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_polyhedron_from_points_json(const char *json, struct TcPolyhedron **out_p);

/**
 * Canonical JSON form of a polyhedron.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_polyhedron_to_json(const struct TcPolyhedron *p, char **out_s);

/**
 * Dimension of a polyhedron; -1 when empty.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_polyhedron_dim(const struct TcPolyhedron *p, int64_t *out_d);

/**
 * Whether two polyhedra are the same set.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TcStatus tc_polyhedron_equal(const struct TcPolyhedron *a,
                                  const struct TcPolyhedron *b,
                                  bool *out_eq);

/**
 * Tropical convex hull of a polyhedron.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_polyhedron_tconv(const struct TcPolyhedron *p, struct TcPolyhedron **out_p);

/**
 * Whether a polyhedron is tropically convex.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_polyhedron_is_tconvex(const struct TcPolyhedron *p, bool *out_b);

/**
 * # Safety
 * `p` must be null or a handle from this library, not used afterwards.
 */
void tc_polyhedron_free(struct TcPolyhedron *p);

/**
 * Reads a complex `{"dim": n, "cells": [...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_complex_from_json(const char *json, struct TcComplex **out_c);

/**
 * Tropical convex hull of a JSON list of points, as a complex.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_complex_tconv_points_json(const char *json, struct TcComplex **out_c);

/**
 * Tropical convex hull of the union of the cells; `refine` splits
 * overlapping output cells.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_complex_tconv(const struct TcComplex *c, bool refine, struct TcComplex **out_c);

/**
 * Ordinary convex hull of the union of the cells.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_complex_conv(const struct TcComplex *c, struct TcPolyhedron **out_p);

/**
 * Largest cell dimension; -1 when there are no cells.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_complex_dim(const struct TcComplex *c, int64_t *out_d);

/**
 * Number of cells.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_complex_cell_count(const struct TcComplex *c, size_t *out_n);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_complex_to_json(const struct TcComplex *c, char **out_s);

/**
 * # Safety
 * `c` must be null or a handle from this library, not used afterwards.
 */
void tc_complex_free(struct TcComplex *c);

/**
 * Reads a matrix given as a JSON list of rows.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_matrix_from_json(const char *json, struct TcMatrix **out_m);

/**
 * Tropical determinant. `value` receives the minimum as a rational string
 * such as "-3/2"; `unique` whether exactly one permutation attains it.
 *
 * # Safety
 * `m` must be a live handle; `value` and `unique` must be writable.
 */
enum TcStatus tc_matrix_det(const struct TcMatrix *m, char **value, bool *unique);

/**
 * Tropical rank: size of the largest tropically nonsingular minor.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_matrix_rank(const struct TcMatrix *m, size_t *out_r);

/**
 * # Safety
 * `m` must be null or a handle from this library, not used afterwards.
 */
void tc_matrix_free(struct TcMatrix *m);

/**
 * Reads a fan curve `{"ambient": n, "rays": [{"v": [...], "m": k}, ...]}`.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out` must be writable.
 */
enum TcStatus tc_curve_from_json(const char *json, struct TcCurve **out_c);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_curve_degree(const struct TcCurve *c, uint64_t *out_d);

/**
 * Degree bound report as JSON: dim, deg, holds, ray_max, prop_applicable.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum TcStatus tc_curve_check_json(const struct TcCurve *c, char **out_s);

/**
 * # Safety
 * `c` must be null or a handle from this library, not used afterwards.
 */
void tc_curve_free(struct TcCurve *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPCONV_H */
