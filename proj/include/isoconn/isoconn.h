/*
 * C interface to libisoconn.
 *
 * Every object is an opaque handle created by an ic_*_create / ic_* call that
 * takes an `out` pointer and released by the matching *_destroy function.
 * Functions that can fail return ic_status; on failure the out pointer is
 * left untouched and ic_last_error() describes the problem (per thread).
 * Strings returned through `char** out` are owned by the caller and must be
 * released with ic_string_free. Agent and permutation indices are 1-based at
 * this boundary, matching the JSON formats; positions inside returned lists
 * (eigenvector, family entry, zone point) are 0-based.
 */
#ifndef ISOCONN_H
#define ISOCONN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ISOCONN_BUILDING)
#    define IC_API __declspec(dllexport)
#  else
#    define IC_API __declspec(dllimport)
#  endif
#else
#  define IC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ic_status {
  IC_OK = 0,
  IC_ERR_NON_SYMMETRIC = 1,
  IC_ERR_NON_FINITE = 2,
  IC_ERR_NOT_BIJECTION = 3,
  IC_ERR_NOT_SQUARE = 4,
  IC_ERR_ORDER_TOO_SMALL = 5,
  IC_ERR_ORDER_TOO_LARGE = 6,
  IC_ERR_ORDER_MISMATCH = 7,
  IC_ERR_NO_CONVERGENCE = 8,
  IC_ERR_INVALID_CONFIGURATION = 9,
  IC_ERR_COINCIDENT_AGENTS = 10,
  IC_ERR_NOT_LAPLACIAN = 11,
  IC_ERR_DEGENERATE_FIEDLER = 12,
  IC_ERR_INVALID_TRANSFORM = 13,
  IC_ERR_INVALID_VARIATION = 14,
  IC_ERR_INDEX_OUT_OF_RANGE = 15,
  IC_ERR_NON_POSITIVE_PARAMETER = 16,
  IC_ERR_NEGATIVE_DISCRIMINANT = 17,
  IC_ERR_EMPTY_GRID = 18,
  IC_ERR_INVALID_ARGUMENT = 19,
  IC_ERR_PARSE = 20,
  IC_ERR_OUT_OF_MEMORY = 91,
  IC_ERR_INTERNAL = 99
} ic_status;

typedef enum ic_precision { IC_PRECISION_DISPLAY = 0, IC_PRECISION_FULL = 1 } ic_precision;

IC_API const char* ic_status_name(ic_status status);
IC_API const char* ic_last_error(void);
IC_API void ic_string_free(char* s);
IC_API const char* ic_version(void);

/* ---- matrices ---------------------------------------------------------- */

typedef struct ic_matrix ic_matrix;

IC_API ic_status ic_matrix_create(size_t order, const double* row_major, ic_matrix** out);
IC_API ic_status ic_matrix_from_json(const char* text, ic_matrix** out);
IC_API ic_status ic_matrix_to_json(const ic_matrix* m, ic_precision precision, char** out);
IC_API ic_status ic_matrix_clone(const ic_matrix* m, ic_matrix** out);
IC_API void ic_matrix_destroy(ic_matrix* m);
IC_API size_t ic_matrix_order(const ic_matrix* m);
/* Copies order*order entries, row-major. */
IC_API ic_status ic_matrix_entries(const ic_matrix* m, double* out, size_t capacity);
IC_API ic_status ic_matrix_equal(const ic_matrix* a, const ic_matrix* b, double tol, int* out);

IC_API ic_status ic_permutation_matrix(const size_t* images, size_t n, ic_matrix** out);
IC_API ic_status ic_ones_axis_rotation(size_t n, double theta, ic_matrix** out);

typedef struct ic_iso_verdict {
  double orthonormality_error;
  double fixed_point_error;
  int orthonormal;
  int fixes_ones;
  int permutation;
  int identity;
  int passes;
} ic_iso_verdict;

IC_API ic_status ic_validate_iso_transform(const ic_matrix* q, double tol, ic_iso_verdict* out);

/* ---- eigendecomposition ------------------------------------------------ */

typedef struct ic_spectrum ic_spectrum;

IC_API ic_status ic_eigendecompose(const ic_matrix* m, ic_spectrum** out);
IC_API void ic_spectrum_destroy(ic_spectrum* s);
IC_API size_t ic_spectrum_order(const ic_spectrum* s);
IC_API ic_status ic_spectrum_eigenvalues(const ic_spectrum* s, double* out, size_t capacity);
IC_API ic_status ic_spectrum_eigenvector(const ic_spectrum* s, size_t index, double* out, size_t capacity);
IC_API double ic_spectrum_residual(const ic_spectrum* s);
IC_API ic_status ic_spectrum_to_json(const ic_spectrum* s, ic_precision precision, char** out);

/* ---- configurations and Laplacians -------------------------------------- */

typedef struct ic_config ic_config;

typedef struct ic_laplacian_validation {
  int symmetric;
  int zero_row_sums;
  int nonpositive_offdiag;
  int psd;
  int connected;
  int passes;
  double lambda1;
  double lambda2;
} ic_laplacian_validation;

IC_API double ic_adjacency_weight(double distance, double sigma, double range);
IC_API ic_status ic_config_from_json(const char* text, ic_config** out);
IC_API ic_status ic_config_to_json(const ic_config* c, ic_precision precision, char** out);
IC_API void ic_config_destroy(ic_config* c);
IC_API size_t ic_config_size(const ic_config* c);
/* 1-based index of the agent with the given id. */
IC_API ic_status ic_config_index_of(const ic_config* c, const char* id, size_t* out);
IC_API ic_status ic_config_laplacian(const ic_config* c, ic_matrix** out);
IC_API ic_status ic_config_is_connected(const ic_config* c, int* out);
IC_API ic_status ic_config_relabel(const ic_config* c, const size_t* images, size_t n, ic_config** out);
/* ghosts_xy holds n_ghosts (x, y) pairs; may be NULL when n_ghosts is 0. */
IC_API ic_status ic_config_render_svg(const ic_config* c, const double* ghosts_xy, size_t n_ghosts, char** out);
IC_API ic_status ic_validate_laplacian(const ic_matrix* m, double tol, ic_laplacian_validation* out);

/* ---- connectivity ------------------------------------------------------- */

typedef struct ic_report ic_report;

IC_API ic_status ic_algebraic_connectivity(const ic_matrix* laplacian, ic_report** out);
IC_API void ic_report_destroy(ic_report* r);
IC_API double ic_report_lambda2(const ic_report* r);
IC_API int ic_report_degenerate(const ic_report* r);
IC_API size_t ic_report_order(const ic_report* r);
IC_API ic_status ic_report_fiedler(const ic_report* r, double* out, size_t capacity);
IC_API ic_status ic_report_spectrum(const ic_report* r, double* out, size_t capacity);
IC_API ic_status ic_report_to_json(const ic_report* r, ic_precision precision, char** out);

IC_API ic_status ic_is_isospectral(const ic_matrix* a, const ic_matrix* b, double tol, int* out);

typedef struct ic_null_space_check {
  int holds;
  double residual;
  double lambda2_a;
  double lambda2_b;
  int lambda2_agree;
} ic_null_space_check;

IC_API ic_status ic_fiedler_null_space_check(const ic_matrix* a, const ic_matrix* b, double tol,
                                            ic_null_space_check* out);

/* ---- isospectral families ------------------------------------------------ */

typedef struct ic_family ic_family;

typedef struct ic_family_options {
  size_t limit;  /* 0: unlimited */
  int dedupe;
  int use_seed;  /* required for order > 8 */
  uint64_t seed;
} ic_family_options;

/* One-entry family holding Q^T L Q. */
IC_API ic_status ic_similarity_transform(const ic_matrix* laplacian, const ic_matrix* q, ic_family** out);
IC_API ic_status ic_permutation_family(const ic_matrix* laplacian, const ic_family_options* options,
                                      ic_family** out);
IC_API void ic_family_destroy(ic_family* f);
IC_API size_t ic_family_size(const ic_family* f);
IC_API ic_status ic_family_result(const ic_family* f, size_t index, ic_matrix** out);
IC_API ic_status ic_family_transform(const ic_family* f, size_t index, ic_matrix** out);
IC_API ic_status ic_family_flags(const ic_family* f, size_t index, int* laplacian_structured,
                                int* distinct_from_base);
/* Writes the 1-based permutation; *has_perm is 0 for non-permutation transforms. */
IC_API ic_status ic_family_perm(const ic_family* f, size_t index, size_t* out, size_t capacity, int* has_perm);
/* JSON array of {"perm", "matrix", "laplacian_structured", "distinct_from_base"}. */
IC_API ic_status ic_family_to_json(const ic_family* f, ic_precision precision, char** out);

/* ---- mobile agent -------------------------------------------------------- */

typedef struct ic_block ic_block;

IC_API ic_status ic_block_decompose(const ic_matrix* laplacian, size_t agent, ic_block** out);
IC_API void ic_block_destroy(ic_block* b);
IC_API double ic_block_gamma(const ic_block* b);
IC_API ic_status ic_block_coupling(const ic_block* b, double* out, size_t capacity);
IC_API ic_status ic_block_reduced(const ic_block* b, ic_matrix** out);
IC_API ic_status ic_block_reassemble(const ic_block* b, ic_matrix** out);

IC_API ic_status ic_connectivity_differential(const ic_matrix* laplacian, const ic_matrix* variation, double* out);
IC_API ic_status ic_laplacian_variation(const ic_config* c, size_t mobile, double dx, double dy, ic_matrix** out);
IC_API ic_status ic_connectivity_gradient(const ic_config* c, size_t mobile, double* gx, double* gy);

typedef struct ic_moves ic_moves;

IC_API ic_status ic_mirror_moves(const ic_config* c, size_t mobile, ic_moves** out);
IC_API void ic_moves_destroy(ic_moves* m);
/* "free", "circle", "mirror", "collinear", "rigid" or "blocked". */
IC_API const char* ic_moves_kind(const ic_moves* m);
IC_API size_t ic_moves_count(const ic_moves* m);
IC_API ic_status ic_moves_alternative(const ic_moves* m, size_t index, double* x, double* y);
IC_API ic_status ic_moves_to_json(const ic_moves* m, ic_precision precision, char** out);

typedef struct ic_path ic_path;

IC_API ic_status ic_path_from_json(const char* text, ic_path** out);
IC_API void ic_path_destroy(ic_path* p);
IC_API const char* ic_path_mobile(const ic_path* p);
IC_API size_t ic_path_steps(const ic_path* p);
IC_API size_t ic_path_waypoint_count(const ic_path* p);
IC_API ic_status ic_path_waypoints(const ic_path* p, double* xy, size_t capacity);

typedef struct ic_integration ic_integration;

typedef struct ic_integration_values {
  double integral;
  double direct;
  double lambda2_start;
  double lambda2_end;
  double min_gap;
  size_t steps;
  int range_crossing;
} ic_integration_values;

IC_API ic_status ic_integrate_path(const ic_config* c, size_t mobile, const double* waypoints_xy,
                                  size_t n_waypoints, size_t steps, ic_integration** out);
IC_API void ic_integration_destroy(ic_integration* r);
IC_API void ic_integration_get(const ic_integration* r, ic_integration_values* out);
IC_API size_t ic_integration_warning_count(const ic_integration* r);
IC_API const char* ic_integration_warning(const ic_integration* r, size_t index);
IC_API ic_status ic_integration_to_json(const ic_integration* r, ic_precision precision, char** out);

/* ---- parametric family and zones --------------------------------------- */

typedef struct ic_l4_validity {
  int upper_root_condition;
  int numeric_lambda2_is_4;
  int discrepancy;
  double lambda2;
  double lower_root;
} ic_l4_validity;

IC_API ic_status ic_parametric_l4(double alpha, double beta, ic_matrix** out);
IC_API ic_status ic_l4_closed_form_spectrum(double alpha, double beta, double out[4]);
IC_API ic_status ic_l4_validity_check(double alpha, double beta, ic_l4_validity* out);

typedef struct ic_grid {
  double x_min;
  double x_max;
  double y_min;
  double y_max;
  size_t nx;
  size_t ny;
} ic_grid;

typedef struct ic_zone ic_zone;

/* target may be NULL: defaults to lambda2 of the configuration as given. */
IC_API ic_status ic_iso_connectivity_zone(const ic_config* c, size_t mobile, const ic_grid* grid, double tol,
                                         const double* target, ic_zone** out);
IC_API void ic_zone_destroy(ic_zone* z);
IC_API double ic_zone_target(const ic_zone* z);
IC_API size_t ic_zone_accepted_count(const ic_zone* z);
IC_API size_t ic_zone_rejected_count(const ic_zone* z);
IC_API ic_status ic_zone_accepted(const ic_zone* z, size_t index, double* x, double* y, double* lambda2);
IC_API ic_status ic_zone_to_json(const ic_zone* z, ic_precision precision, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ISOCONN_H */
