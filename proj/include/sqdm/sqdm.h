/* C interface to the squared distance matrix library for complete
 * multipartite graphs K_{n_1,...,n_t}.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Every fallible call returns an sqdm_status; on failure a description is
 * available from sqdm_last_error() on the same thread. Strings returned
 * through char** out-parameters are heap allocated and must be released
 * with sqdm_string_free().
 *
 * Matrices are indexed in canonical block order: parts sorted by
 * non-increasing size, the vertices of each part contiguous. Exact values
 * are exchanged as decimal fraction strings "p/q" in lowest terms, or "p"
 * for integers.
 */
#ifndef SQDM_H
#define SQDM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SQDM_BUILDING_LIBRARY)
#    define SQDM_API __declspec(dllexport)
#  else
#    define SQDM_API __declspec(dllimport)
#  endif
#else
#  define SQDM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqdm_status {
  SQDM_OK = 0,
  SQDM_ERR_INVALID_ARGUMENT = 1,
  SQDM_ERR_EMPTY_OR_SINGLETON_PARTITION = 2,
  SQDM_ERR_NON_POSITIVE_PART = 3,
  SQDM_ERR_COFACTOR_SUM_ZERO = 4,
  SQDM_ERR_SINGULAR_DELTA = 5,
  SQDM_ERR_SINGULAR_MATRIX = 6,
  SQDM_ERR_NOT_SYMMETRIC = 7,
  SQDM_ERR_PARSE = 8,
  SQDM_ERR_CALLBACK_ABORTED = 9,
  SQDM_ERR_INTERNAL = 10
} sqdm_status;

typedef enum sqdm_matrix_kind {
  /* squared distance matrix */
  SQDM_MATRIX_DELTA = 0,
  /* Laplacian-like matrix; needs a nonzero cofactor sum */
  SQDM_MATRIX_LAPLACIAN = 1,
  /* inverse in block form; needs a nonzero determinant */
  SQDM_MATRIX_INVERSE_BLOCK = 2,
  /* inverse as -L + (1/lambda) nu nu^T; needs nonzero determinant and cofactor sum */
  SQDM_MATRIX_INVERSE_RANK_ONE = 3,
  /* BFS-derived squared distances */
  SQDM_MATRIX_BFS = 4
} sqdm_matrix_kind;

typedef struct sqdm_partition sqdm_partition;
typedef struct sqdm_matrix sqdm_matrix;
typedef struct sqdm_report sqdm_report;

/* Receives one JSON document per call. Returning nonzero stops the scan
 * with SQDM_ERR_CALLBACK_ABORTED. */
typedef int (*sqdm_line_callback)(const char* line, void* user_data);

SQDM_API const char* sqdm_version(void);
SQDM_API const char* sqdm_status_string(sqdm_status status);
SQDM_API const char* sqdm_last_error(void);
SQDM_API void sqdm_string_free(char* str);

/* ---- partitions -------------------------------------------------------- */

SQDM_API sqdm_status sqdm_partition_new(const int64_t* sizes, size_t count, sqdm_partition** out);
/* Comma separated sizes, e.g. "2,2,1". */
SQDM_API sqdm_status sqdm_partition_parse(const char* token, sqdm_partition** out);
SQDM_API void sqdm_partition_free(sqdm_partition* p);

SQDM_API size_t sqdm_partition_order(const sqdm_partition* p);
SQDM_API size_t sqdm_partition_parts(const sqdm_partition* p);
SQDM_API size_t sqdm_partition_unit_parts(const sqdm_partition* p);
/* Copies min(capacity, parts) canonical sizes into `sizes`. */
SQDM_API size_t sqdm_partition_sizes(const sqdm_partition* p, uint32_t* sizes, size_t capacity);
/* {"sizes":[...],"n":..,"t":..,"h":..,"s":..} */
SQDM_API sqdm_status sqdm_partition_json(const sqdm_partition* p, char** out);

/* Sizes, invariants, det, cof, lambda and classification as one JSON object. */
SQDM_API sqdm_status sqdm_info_json(const sqdm_partition* p, char** out);
SQDM_API sqdm_status sqdm_det(const sqdm_partition* p, char** out);
SQDM_API sqdm_status sqdm_cof(const sqdm_partition* p, char** out);
SQDM_API sqdm_status sqdm_lambda(const sqdm_partition* p, char** out);
/* Writes 0/1 flags; either pointer may be NULL. */
SQDM_API sqdm_status sqdm_classify(const sqdm_partition* p, int* det_zero, int* cof_zero);

/* ---- matrices ---------------------------------------------------------- */

SQDM_API sqdm_status sqdm_matrix_build(const sqdm_partition* p, sqdm_matrix_kind kind, sqdm_matrix** out);
SQDM_API void sqdm_matrix_free(sqdm_matrix* m);
SQDM_API size_t sqdm_matrix_order(const sqdm_matrix* m);
SQDM_API sqdm_status sqdm_matrix_entry(const sqdm_matrix* m, size_t row, size_t col, char** out);
/* Headerless CSV, one row per line. */
SQDM_API sqdm_status sqdm_matrix_csv(const sqdm_matrix* m, char** out);
/* {"order":..,"vertex_order":"...","entries":[[...],...]} */
SQDM_API sqdm_status sqdm_matrix_json(const sqdm_matrix* m, char** out);
SQDM_API sqdm_status sqdm_matrix_pretty(const sqdm_matrix* m, char** out);
/* Product a*b as a new matrix. */
SQDM_API sqdm_status sqdm_matrix_multiply(const sqdm_matrix* a, const sqdm_matrix* b, sqdm_matrix** out);
SQDM_API int sqdm_matrix_equal(const sqdm_matrix* a, const sqdm_matrix* b);
SQDM_API int sqdm_matrix_is_identity(const sqdm_matrix* m);
SQDM_API sqdm_status sqdm_matrix_det(const sqdm_matrix* m, char** out);
SQDM_API sqdm_status sqdm_matrix_cofactor_sum(const sqdm_matrix* m, char** out);
SQDM_API sqdm_status sqdm_matrix_rank(const sqdm_matrix* m, size_t* out);
SQDM_API sqdm_status sqdm_matrix_inverse(const sqdm_matrix* m, sqdm_matrix** out);
/* Degree-descending coefficients of det(xI - M) as a JSON array of fraction strings. */
SQDM_API sqdm_status sqdm_matrix_char_poly_json(const sqdm_matrix* m, char** out);
SQDM_API sqdm_status sqdm_matrix_inertia(const sqdm_matrix* m, size_t* positive, size_t* zero, size_t* negative);
/* `mu` is a fraction string such as "1/4". */
SQDM_API sqdm_status sqdm_matrix_eigen_multiplicity(const sqdm_matrix* m, const char* mu, size_t* out);

/* ---- verification ------------------------------------------------------ */

SQDM_API sqdm_status sqdm_verify(const sqdm_partition* p, sqdm_report** out);
SQDM_API void sqdm_report_free(sqdm_report* r);
SQDM_API size_t sqdm_report_check_count(const sqdm_report* r);
SQDM_API size_t sqdm_report_failure_count(const sqdm_report* r);
SQDM_API size_t sqdm_report_skipped_count(const sqdm_report* r);
SQDM_API sqdm_status sqdm_report_json(const sqdm_report* r, char** out);

/* Calls `callback` with one verification report per partition with
 * n <= n_max, then with a summary object. `workers` = 0 picks the default
 * (SQDM_WORKERS or the hardware concurrency). `failures` receives the
 * number of reports with at least one failed check. */
SQDM_API sqdm_status sqdm_scan(size_t n_max, size_t workers, sqdm_line_callback callback, void* user_data,
                               size_t* failures);

/* Same shape as sqdm_scan, one conjecture report per partition with a
 * singular squared distance matrix. `singular` receives the report count. */
SQDM_API sqdm_status sqdm_conjecture_scan(size_t n_max, size_t workers, sqdm_line_callback callback,
                                          void* user_data, size_t* singular);

#ifdef __cplusplus
}
#endif

#endif /* SQDM_H */
