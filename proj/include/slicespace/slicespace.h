/* SPDX-License-Identifier: Apache-2.0 */
#ifndef SLICESPACE_H
#define SLICESPACE_H

/*
 * C interface of the slicespace library: norms, seminorms, kernels and
 * invariance checks for slice regular function spaces on the quaternionic
 * unit ball (Bloch, weighted Bergman, Besov, Dirichlet).
 *
 * Handles are opaque; every function returns a status code. String outputs
 * are allocated by the library and must be released with
 * slicespace_string_free. A human-readable message for the last failure on
 * the calling thread is available via slicespace_last_error.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SLICESPACE_API __declspec(dllexport)
#else
#define SLICESPACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slicespace_status {
  SLICESPACE_OK = 0,
  SLICESPACE_ERR_CHECK_FAILED = 1, /* a check-suite assertion failed */
  SLICESPACE_ERR_PARSE = 2,        /* malformed input (JSON, file contents) */
  SLICESPACE_ERR_PARAM = 3,        /* parameter outside its domain */
  SLICESPACE_ERR_EVAL = 4,         /* evaluation/numerics failure */
  SLICESPACE_ERR_NULL = 5          /* required pointer was NULL */
} slicespace_status;

/* A truncated power series with quaternionic coefficients. */
typedef struct slicespace_series slicespace_series;

/* Quadrature / sup-estimator configuration (echoed into every report). */
typedef struct slicespace_quad_config {
  int radial;         /* radial quadrature order, default 64 */
  int angular;        /* angular quadrature order, default 128 */
  double clip;        /* clip radius in (0,1], default 1 - 1e-6 */
  int sphere_samples; /* axes sampled on the sphere, default 64 */
  int sup_radial;     /* sup-estimator radial grid, default 256 */
  int sup_angular;    /* sup-estimator angular grid, default 256 */
  int a_grid;         /* a-grid size for the small-p Besov seminorm, default 64 */
  int threads;        /* 0 = SLICESPACE_THREADS env or hardware */
} slicespace_quad_config;

/* Space parameters; fields are read only where they apply. */
typedef struct slicespace_params {
  double p;     /* integrability exponent, default 2 */
  double alpha; /* Bergman weight, default 0 */
  int n;        /* Besov derivative order, default 1 */
  double t;     /* embedding exponent, default 2 */
  double tol;   /* tolerance override for checks; <= 0 keeps defaults */
} slicespace_params;

SLICESPACE_API void slicespace_quad_config_init(slicespace_quad_config* cfg);
SLICESPACE_API void slicespace_params_init(slicespace_params* params);

/* --- series ------------------------------------------------------------ */

/* Parses {"coeffs": [[w,x,y,z], ...]}. */
SLICESPACE_API slicespace_status slicespace_series_parse(const char* json,
                                                         slicespace_series** out);
/* wxyz holds 4*count doubles, one quaternion per coefficient. */
SLICESPACE_API slicespace_status slicespace_series_from_coeffs(const double* wxyz, size_t count,
                                                               slicespace_series** out);
SLICESPACE_API void slicespace_series_free(slicespace_series* series);
SLICESPACE_API slicespace_status slicespace_series_size(const slicespace_series* series,
                                                        size_t* out);
/* q and out are [w,x,y,z]. */
SLICESPACE_API slicespace_status slicespace_series_eval(const slicespace_series* series,
                                                        const double q[4], double out[4]);

/* --- computations -------------------------------------------------------*/

/* space: "bloch" | "hinf" | "bergman" | "besov" | "dirichlet".
 * On success *json_out holds a NormReport:
 * {"space": ..., "value": ..., "per_axis": [...], "config": {...}}. */
SLICESPACE_API slicespace_status slicespace_norm(const slicespace_series* series,
                                                 const char* space,
                                                 const slicespace_params* params,
                                                 const slicespace_quad_config* cfg,
                                                 char** json_out);

/* suite: "bloch" | "bergman" | "besov" | "dirichlet" | "kernels" | "all".
 * Runs the named invariant suite on seeded random families. Returns
 * SLICESPACE_OK when every assertion holds, SLICESPACE_ERR_CHECK_FAILED when
 * one fails; *json_out carries the per-assertion report in both cases. */
SLICESPACE_API slicespace_status slicespace_check(const char* suite, uint64_t seed,
                                                  const slicespace_params* params,
                                                  const slicespace_quad_config* cfg,
                                                  char** json_out);

/* Radial profiles as CSV: r, (1-r^2) max_theta |df|, circle mean of |f|^p. */
SLICESPACE_API slicespace_status slicespace_profile(const slicespace_series* series, double p,
                                                    const slicespace_quad_config* cfg,
                                                    char** csv_out);

/* Kernel / projection grid export:
 * {"z": [[re,im],...], "value": [[w,x,y,z],...]}. With a series the grid
 * holds the Bergman projection of the series; without one it holds the
 * kernel K_alpha(., w) for w = (w_re, w_im) on the e1 slice. */
SLICESPACE_API slicespace_status slicespace_kernel_grid(const slicespace_series* series_or_null,
                                                        double alpha, double w_re, double w_im,
                                                        int grid_radial, int grid_angular,
                                                        const slicespace_quad_config* cfg,
                                                        char** json_out);

/* --- plumbing ----------------------------------------------------------- */

SLICESPACE_API void slicespace_string_free(char* text);
SLICESPACE_API const char* slicespace_last_error(void);
SLICESPACE_API const char* slicespace_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SLICESPACE_H */
