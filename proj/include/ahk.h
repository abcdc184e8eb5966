/* ahk — affine translation hypersurface toolkit, C API.
 *
 * The library evaluates curvature quantities of graph hypersurfaces of the
 * form z(x) = f_1(y_1) + ... + f_n(y_n) with y = A*x for an invertible
 * matrix A, builds the closed-form families with prescribed curvature
 * behaviour, and runs grid-based verification of the structural statements
 * about those families.
 *
 * All handles are opaque; every function returns an ahk_status and reports
 * detail through ahk_last_error(). Strings returned through char** out
 * parameters are heap-allocated and must be released with ahk_string_free().
 * Specs are immutable once created, so one ahk_spec may be shared freely
 * across threads.
 */

#ifndef AHK_H
#define AHK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AHK_API __declspec(dllexport)
#else
#define AHK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ahk_spec ahk_spec;

/* Status values double as CLI exit codes where the classes overlap. */
typedef enum ahk_status {
  AHK_STATUS_OK = 0,
  AHK_STATUS_INTERNAL = 1,         /* invariant breakage inside the library */
  AHK_STATUS_PARSE_ERROR = 2,      /* unreadable file or malformed spec JSON */
  AHK_STATUS_DOMAIN_ERROR = 3,     /* singular point, ambient mismatch, empty grid */
  AHK_STATUS_CONSTRAINT_ERROR = 4, /* violated constructor/argument precondition */
  AHK_STATUS_UNSUPPORTED = 6       /* e.g. OBJ export with n != 2 */
} ahk_status;

typedef enum ahk_ambient {
  AHK_AMBIENT_EUCLIDEAN = 0,
  AHK_AMBIENT_ISOTROPIC = 1
} ahk_ambient;

typedef enum ahk_quantity {
  AHK_QUANTITY_GK = 0,        /* Gauss-Kronecker curvature (Euclidean specs) */
  AHK_QUANTITY_RELATIVE = 1,  /* relative curvature det(hess z) (isotropic) */
  AHK_QUANTITY_MEAN = 2,      /* isotropic mean curvature (isotropic) */
  AHK_QUANTITY_PRINCIPAL = 3, /* largest principal curvature (isotropic) */
  AHK_QUANTITY_KI = 4         /* curvature function K_i, 1-based ki_index */
} ahk_quantity;

typedef enum ahk_theorem {
  AHK_THEOREM_CYLINDER = 0, /* constant Gauss-Kronecker curvature => cylinder */
  AHK_THEOREM_CRC = 1,      /* constant relative curvature classification */
  AHK_THEOREM_CIMC = 2,     /* constant isotropic mean classification */
  AHK_THEOREM_EIGEN = 3     /* Laplacian eigenfunction classification */
} ahk_theorem;

typedef enum ahk_verdict {
  AHK_VERDICT_CONFIRMS = 0,
  AHK_VERDICT_VIOLATES = 1,
  AHK_VERDICT_NOT_APPLICABLE = 2
} ahk_verdict;

/* Library version as "major.minor.patch". Static storage; do not free. */
AHK_API const char *ahk_version(void);

/* Message for the most recent failing call on this thread. Static storage,
 * valid until the next failing call; do not free. */
AHK_API const char *ahk_last_error(void);

/* Releases strings returned through char** out parameters. NULL is a no-op. */
AHK_API void ahk_string_free(char *s);

/* --- spec lifecycle ------------------------------------------------------ */

AHK_API ahk_status ahk_spec_parse(const char *json_text, ahk_spec **out);
AHK_API ahk_status ahk_spec_load(const char *path, ahk_spec **out);
AHK_API ahk_status ahk_spec_save(const ahk_spec *spec, const char *path);
AHK_API ahk_status ahk_spec_to_json(const ahk_spec *spec, char **json_out);
AHK_API void ahk_spec_free(ahk_spec *spec);

AHK_API int ahk_spec_dim(const ahk_spec *spec);
AHK_API ahk_ambient ahk_spec_ambient(const ahk_spec *spec);

/* --- pointwise evaluation ------------------------------------------------ */

/* x points at ahk_spec_dim(spec) coordinates. */
AHK_API ahk_status ahk_eval_height(const ahk_spec *spec, const double *x, double *z_out);

/* ki_index is only read for AHK_QUANTITY_KI. */
AHK_API ahk_status ahk_eval_quantity(const ahk_spec *spec, ahk_quantity quantity, int ki_index,
                                     const double *x, double *value_out);

/* --- grid scans and verdicts --------------------------------------------- */

/* lo/hi point at n bounds each; points_per_axis >= 2. Grid points whose
 * pulled-back coordinates come within exclusion_radius of a profile
 * singularity are skipped and counted in the report. The report is a JSON
 * object {"quantity","samples","min","max","mean","stddev","is_constant",
 * "constant_value","skipped","verdict"}. */
AHK_API ahk_status ahk_scan(const ahk_spec *spec, ahk_quantity quantity, int ki_index,
                            const double *lo, const double *hi, int points_per_axis,
                            double exclusion_radius, char **report_json_out);

/* Verdict semantics: hypotheses that fail to hold map to NOT_APPLICABLE;
 * VIOLATES is reserved for implementation bugs. lambda is only read for
 * AHK_THEOREM_EIGEN. Either out parameter may be NULL. */
AHK_API ahk_status ahk_verify(const ahk_spec *spec, ahk_theorem theorem, double lambda,
                              const double *lo, const double *hi, int points_per_axis,
                              double exclusion_radius, char **report_json_out,
                              ahk_verdict *verdict_out);

/* Deterministic randomized self-check; the summary reports check/failure
 * counts as JSON. */
AHK_API ahk_status ahk_fuzz(uint64_t seed, int trials, char **summary_json_out);

/* --- closed-form constructors -------------------------------------------- */

/* All constructors take the matrix row-major with n*n entries and produce
 * isotropic specs unless stated otherwise. Coefficient arrays may be NULL
 * where a length-0 semantic makes no sense only if noted. */

/* Quadratic family with constant relative curvature k0 != 0; c_partial
 * holds the first n-1 quadratic coefficients (all nonzero), d and e the n
 * linear/constant terms. */
AHK_API ahk_status ahk_construct_crc(const double *matrix, int n, double k0,
                                     const double *c_partial, const double *d, const double *e,
                                     ahk_spec **out);

/* Quadratic/linear family with constant isotropic mean h0; c must sum to
 * n*h0 (entries may be zero, degenerating that profile to a line). */
AHK_API ahk_status ahk_construct_cimc(const double *matrix, int n, double h0, const double *c,
                                      const double *d, const double *e, ahk_spec **out);

/* Laplacian-eigenfunction family for lambda != 0; mu must sum to zero. */
AHK_API ahk_status ahk_construct_eigen(const double *matrix, int n, double lambda,
                                       const double *c, const double *d, const double *mu,
                                       ahk_spec **out);

/* Replaces profile linear_index with slope*y + intercept. The companion
 * profiles are given as a JSON array of n-1 profile objects (same schema as
 * the "profiles" field of a spec file); NULL means quadratic y^2 for each. */
AHK_API ahk_status ahk_construct_cylinder(const double *matrix, int n, int linear_index,
                                          double slope, double intercept,
                                          const char *other_profiles_json, ahk_ambient ambient,
                                          ahk_spec **out);

/* --- export --------------------------------------------------------------- */

AHK_API ahk_status ahk_export_obj(const ahk_spec *spec, const double *lo, const double *hi,
                                  int points_per_axis, double exclusion_radius,
                                  const char *path);

/* with_quantity < 0 omits the quantity column; otherwise pass an
 * ahk_quantity value. */
AHK_API ahk_status ahk_export_csv(const ahk_spec *spec, int with_quantity, int ki_index,
                                  const double *lo, const double *hi, int points_per_axis,
                                  double exclusion_radius, const char *path);

#ifdef __cplusplus
}
#endif

#endif /* AHK_H */
