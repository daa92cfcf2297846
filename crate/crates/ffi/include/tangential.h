#ifndef TANGENTIAL_H
#define TANGENTIAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TpStatus {
  TP_STATUS_OK = 0,
  TP_STATUS_NULL_POINTER = 1,
  /**
   * Too few sides, or a nonpositive or non-finite length.
   */
  TP_STATUS_INVALID_INPUT = 2,
  /**
   * No tangential polygon has these sides.
   */
  TP_STATUS_INFEASIBLE = 3,
  /**
   * Wrong polygon size for the call, `t1` outside its interval, or a
   * winding that does not exist.
   */
  TP_STATUS_PRECONDITION = 4,
  TP_STATUS_OUT_OF_RANGE = 5,
  TP_STATUS_BUFFER_TOO_SMALL = 6,
  /**
   * An internal consistency check failed.
   */
  TP_STATUS_NUMERICAL_FAILURE = 7,
  TP_STATUS_PANIC = 8,
} TpStatus;

/**
 * Opaque bicentric quadrilateral.
 */
typedef struct TpBicentric TpBicentric;

/**
 * Opaque solved polygon.
 */
typedef struct TpSolution TpSolution;

/**
 * One incircle radius of a solved polygon.
 */
typedef struct TpRoot {
  size_t winding;
  double radius;
  double area;
  double shoelace_area;
  double residual;
  double angle_defect;
  double closure_defect;
} TpRoot;

typedef struct TpBicentricInfo {
  double inradius;
  double circumradius;
  double circumcenter_x;
  double circumcenter_y;
  double area;
} TpBicentricInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *tp_status_message(enum TpStatus status);

/**
 * Message of the last failed call on this thread. Valid until the next
 * failing call on the same thread.
 */
const char *tp_last_error_message(void);

/**
 * Elementary symmetric functions of `t[0..n]` into `sigma_out[0..=n]`.
 *
 * # Safety
 * `t` must point to `n` doubles and `sigma_out` to `n + 1` writable doubles.
 */
enum TpStatus tp_elementary_symmetric(const double *t, size_t n, double *sigma_out);

/**
 * Feasibility of `sides[0..n]`. For even `n`, `lo`/`hi` receive the open
 * interval of admissible `t1` (they may be null); for odd `n` they are set
 * to NaN.
 *
 * # Safety
 * `sides` must point to `n` doubles; `feasible` must be writable; `lo` and
 * `hi` must be null or writable.
 */
enum TpStatus tp_check_feasible(const double *sides,
                                size_t n,
                                double tolerance_eps,
                                bool *feasible,
                                double *lo,
                                double *hi);

/**
 * Heron's area of a triangle.
 *
 * # Safety
 * `sides` must point to 3 doubles and `area` must be writable.
 */
enum TpStatus tp_heron_area(const double *sides, double tolerance_eps, double *area);

/**
 * Brahmagupta's area of the cyclic quadrilateral with these sides.
 *
 * # Safety
 * `sides` must point to 4 doubles and `area` must be writable.
 */
enum TpStatus tp_brahmagupta_area(const double *sides, double tolerance_eps, double *area);

/**
 * Solve the polygon with sides `sides[0..n]`: tangent lengths and every
 * incircle radius with its embedding. `t1` is used for even `n`; pass NaN
 * for the default choice. On success `*out` owns a handle to release with
 * `tp_solution_free`.
 *
 * # Safety
 * `sides` must point to `n` doubles and `out` must be writable.
 */
enum TpStatus tp_solve(const double *sides,
                       size_t n,
                       double t1,
                       double tolerance_eps,
                       struct TpSolution **out);

/**
 * # Safety
 * `handle` must be null or a pointer returned by `tp_solve` that has not
 * been freed.
 */
void tp_solution_free(struct TpSolution *handle);

/**
 * Number of sides (and tangent lengths).
 *
 * # Safety
 * `handle` must be null or a live `TpSolution`.
 */
size_t tp_solution_side_count(const struct TpSolution *handle);

/**
 * Number of radii (windings 1..k).
 *
 * # Safety
 * `handle` must be null or a live `TpSolution`.
 */
size_t tp_solution_root_count(const struct TpSolution *handle);

/**
 * The `t1` actually used; NaN for odd `n`.
 *
 * # Safety
 * `handle` must be null or a live `TpSolution`.
 */
double tp_solution_t1(const struct TpSolution *handle);

/**
 * Copy the tangent lengths into `out[0..n]`.
 *
 * # Safety
 * `handle` must be a live `TpSolution`; `out` must point to `len` writable
 * doubles.
 */
enum TpStatus tp_solution_tangents(const struct TpSolution *handle, double *out, size_t len);

/**
 * Details of root `index` (0-based; winding `index + 1`).
 *
 * # Safety
 * `handle` must be a live `TpSolution`; `out` must be writable.
 */
enum TpStatus tp_solution_root(const struct TpSolution *handle, size_t index, struct TpRoot *out);

/**
 * Vertices of root `index` as interleaved `x, y` pairs (`2 n` doubles).
 *
 * # Safety
 * `handle` must be a live `TpSolution`; `xy` must point to `len` writable
 * doubles.
 */
enum TpStatus tp_solution_vertices(const struct TpSolution *handle,
                                   size_t index,
                                   double *xy,
                                   size_t len);

/**
 * Build the bicentric quadrilateral for `sides[0..4]`
 * (`a1 + a3 = a2 + a4` required).
 *
 * # Safety
 * `sides` must point to 4 doubles and `out` must be writable.
 */
enum TpStatus tp_bicentric_build(const double *sides,
                                 double tolerance_eps,
                                 struct TpBicentric **out);

/**
 * # Safety
 * `handle` must be null or a pointer returned by `tp_bicentric_build` that
 * has not been freed.
 */
void tp_bicentric_free(struct TpBicentric *handle);

/**
 * # Safety
 * `handle` must be a live `TpBicentric`; `out` must be writable.
 */
enum TpStatus tp_bicentric_info(const struct TpBicentric *handle, struct TpBicentricInfo *out);

/**
 * Vertices of the quadrilateral as 8 interleaved doubles.
 *
 * # Safety
 * `handle` must be a live `TpBicentric`; `xy` must point to `len` writable
 * doubles.
 */
enum TpStatus tp_bicentric_vertices(const struct TpBicentric *handle, double *xy, size_t len);

/**
 * Vertices of the quadrilateral whose tangent chain starts on the
 * circumcircle at `start_angle`, as 8 interleaved doubles.
 *
 * # Safety
 * `handle` must be a live `TpBicentric`; `xy` must point to `len` writable
 * doubles.
 */
enum TpStatus tp_bicentric_poncelet(const struct TpBicentric *handle,
                                    double start_angle,
                                    double tolerance_eps,
                                    double *xy,
                                    size_t len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TANGENTIAL_H */
