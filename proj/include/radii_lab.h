/* C interface to the radii_lab library.
 *
 * Every call returns an rl_status. On failure, rl_last_error() returns a
 * message for the calling thread that stays valid until its next call.
 * Handles are opaque and must be released with their matching free call.
 */
#ifndef RADII_LAB_H
#define RADII_LAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RADII_LAB_BUILDING)
#    define RADII_LAB_API __declspec(dllexport)
#  else
#    define RADII_LAB_API __declspec(dllimport)
#  endif
#else
#  define RADII_LAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rl_status {
  RL_OK = 0,
  RL_ERR_NEAR_ZERO_CONSTANT_TERM,
  RL_ERR_TAIL_BOUND_UNAVAILABLE,
  RL_ERR_ARGUMENT_OUT_OF_RANGE,
  RL_ERR_UNSUPPORTED_CLASS,
  RL_ERR_NOT_SCHWARZ_BOUNDED,
  RL_ERR_DEGENERATE_TRANSFORM,
  RL_ERR_ZERO_DENOMINATOR,
  RL_ERR_UNKNOWN_EQUATION,
  RL_ERR_PARAM_OUT_OF_RANGE,
  RL_ERR_NO_BRACKET_FOUND,
  RL_ERR_NO_CLOSED_FORM,
  RL_ERR_NO_WITNESS,
  RL_ERR_NOT_CERTIFIED_OMEGA_A,
  RL_ERR_PARSE,
  RL_ERR_IO,
  RL_ERR_NULL_ARGUMENT,
  RL_ERR_BUFFER_TOO_SMALL,
  RL_ERR_INTERNAL
} rl_status;

RADII_LAB_API const char* rl_last_error(void);
RADII_LAB_API const char* rl_status_name(rl_status status);

/* Truncation order from RADII_LAB_ORDER, or 256. */
RADII_LAB_API rl_status rl_default_order(size_t* out);

/* ---- functions ---------------------------------------------------------- */

typedef struct rl_function rl_function;

typedef enum rl_side { RL_SIDE_F_OVER_Z = 0, RL_SIDE_Z_OVER_F = 1 } rl_side;

/* Catalog name, "coeffs:a2,a3,..." or "zoverf:b1,b2,...". On RL_ERR_PARSE,
 * *error_pos (if non-null) receives the offset of the fault. */
RADII_LAB_API rl_status rl_function_parse(const char* spec, size_t order, rl_function** out,
                                          size_t* error_pos);
RADII_LAB_API void rl_function_free(rl_function* f);
RADII_LAB_API size_t rl_function_order(const rl_function* f);
/* Coefficient n of f/z or z/f; zero past the order. */
RADII_LAB_API rl_status rl_function_coeff(const rl_function* f, rl_side side, size_t n,
                                          double* re, double* im);
/* Text form, NUL-terminated. *needed receives the full length plus one. */
RADII_LAB_API rl_status rl_function_text(const rl_function* f, char* buf, size_t cap,
                                         size_t* needed);

RADII_LAB_API size_t rl_catalog_count(void);
RADII_LAB_API const char* rl_catalog_name(size_t i);

/* ---- radius equations --------------------------------------------------- */

typedef struct rl_params {
  double lambda;
  double lambda2;
  double mu;
} rl_params;

/* lambda = lambda2 = mu = 1. */
RADII_LAB_API rl_params rl_params_default(void);

typedef struct rl_root {
  double root;
  double lo;
  double hi;
  double uncertainty;
  size_t iterations;
  int clamped;
} rl_root;

RADII_LAB_API size_t rl_equation_count(void);
RADII_LAB_API const char* rl_equation_id(size_t i);
/* Equation plotted in figure 1..9, or NULL. */
RADII_LAB_API const char* rl_figure_equation(int figure);

RADII_LAB_API rl_status rl_eval_equation(const char* id, const rl_params* params, double r,
                                         double* value);
RADII_LAB_API rl_status rl_solve_radius(const char* id, const rl_params* params, double tol,
                                        rl_root* out);
RADII_LAB_API rl_status rl_closed_form_radius(const char* id, const rl_params* params,
                                              double* out);
/* *has_expected is 0 when no published value is registered. */
RADII_LAB_API rl_status rl_expected_root(const char* id, int* has_expected, double* value,
                                         double* tol);

/* ---- class membership --------------------------------------------------- */

typedef enum rl_verdict {
  RL_CERTIFIED_INSIDE = 0,
  RL_CERTIFIED_OUTSIDE = 1,
  RL_INCONCLUSIVE = 2
} rl_verdict;

RADII_LAB_API const char* rl_verdict_name(rl_verdict v);

typedef struct rl_defect_report {
  double radius;
  double sup_sampled;
  double tail_bound;
  double threshold;
  rl_verdict verdict;
} rl_defect_report;

typedef struct rl_certificate {
  double value;
  double bound;
  int holds;
} rl_certificate;

/* class_name: "M", "U", "P", "Omega" or "OmegaA". */
RADII_LAB_API rl_status rl_sup_defect(const rl_function* f, const char* class_name, double lambda,
                                      double r, size_t samples, rl_defect_report* out);
RADII_LAB_API rl_status rl_certificate_sufficient(const rl_function* f, const char* class_name,
                                                  double lambda, rl_certificate* out);
RADII_LAB_API rl_status rl_quartic_necessary(const rl_function* f, rl_certificate* out);
RADII_LAB_API rl_status rl_area_functional(const rl_function* f, double mu, rl_certificate* out);

/* ---- Bohr quantities ---------------------------------------------------- */

typedef enum rl_bohr_kind { RL_BOHR = 0, RL_ROGOSINSKI = 1, RL_IMPROVED = 2 } rl_bohr_kind;

typedef struct rl_bohr_report {
  double r;
  double quantity;
  double tail_bound;
  double distance_bound;
  int satisfied;
} rl_bohr_report;

/* Evaluated at z = re + i im (r = |z| for RL_BOHR). */
RADII_LAB_API rl_status rl_bohr(const rl_function* f, rl_bohr_kind kind, double re, double im,
                                rl_bohr_report* out);

/* ---- plot data ---------------------------------------------------------- */

/* Writes the "r,value" CSV to path. *rows (if non-null) receives the row count. */
RADII_LAB_API rl_status rl_plot_csv(const char* id, const rl_params* params, double r_min,
                                    double r_max, double step, const char* path, size_t* rows);

/* ---- verification ------------------------------------------------------- */

typedef struct rl_verification rl_verification;

typedef struct rl_record {
  const char* id;
  int criterion;
  const char* description;
  double expected;
  const char* provenance;
  double computed;
  double abs_diff;
  double tolerance;
  const char* comparison; /* "equal", "at_most" or "greater_than" */
  int pass;
} rl_record;

RADII_LAB_API rl_status rl_verify_all(size_t order, rl_verification** out);
RADII_LAB_API void rl_verification_free(rl_verification* v);
RADII_LAB_API size_t rl_verification_count(const rl_verification* v);
/* Strings in *out live as long as the handle. */
RADII_LAB_API rl_status rl_verification_record(const rl_verification* v, size_t i, rl_record* out);
/* Title of criterion 1..9, or NULL. */
RADII_LAB_API const char* rl_criterion_title(int criterion);

#ifdef __cplusplus
}
#endif

#endif /* RADII_LAB_H */
