#include "sqdm/sqdm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sqdm/error.hpp"
#include "sqdm/exact_linalg.hpp"
#include "sqdm/invariants.hpp"
#include "sqdm/matrices.hpp"
#include "sqdm/serialize.hpp"
#include "sqdm/verify.hpp"

struct sqdm_partition {
  sqdm::Partition value;
};

struct sqdm_matrix {
  sqdm::RationalMatrix value;
};

struct sqdm_report {
  sqdm::VerificationReport value;
};

namespace {

thread_local std::string last_error;

sqdm_status map_code(sqdm::ErrorCode code) {
  using sqdm::ErrorCode;
  switch (code) {
    case ErrorCode::EmptyOrSingletonPartition: return SQDM_ERR_EMPTY_OR_SINGLETON_PARTITION;
    case ErrorCode::NonPositivePart: return SQDM_ERR_NON_POSITIVE_PART;
    case ErrorCode::CofactorSumZero: return SQDM_ERR_COFACTOR_SUM_ZERO;
    case ErrorCode::SingularDelta: return SQDM_ERR_SINGULAR_DELTA;
    case ErrorCode::SingularMatrix: return SQDM_ERR_SINGULAR_MATRIX;
    case ErrorCode::NotSymmetric: return SQDM_ERR_NOT_SYMMETRIC;
    case ErrorCode::DimensionMismatch: return SQDM_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SQDM_ERR_PARSE;
  }
  return SQDM_ERR_INTERNAL;
}

sqdm_status fail(sqdm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
sqdm_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const sqdm::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQDM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQDM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQDM_ERR_INTERNAL, "unknown error");
  }
}

sqdm_status null_argument() { return fail(SQDM_ERR_INVALID_ARGUMENT, "null argument"); }

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sqdm_status emit(const std::string& s, char** out) {
  *out = duplicate(s);
  return SQDM_OK;
}

sqdm_status emit_matrix(sqdm::RationalMatrix m, sqdm_matrix** out) {
  *out = new sqdm_matrix{std::move(m)};
  return SQDM_OK;
}

}  // namespace

extern "C" {

const char* sqdm_version(void) { return "0.1.0"; }

const char* sqdm_status_string(sqdm_status status) {
  switch (status) {
    case SQDM_OK: return "ok";
    case SQDM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SQDM_ERR_EMPTY_OR_SINGLETON_PARTITION: return "partition needs at least two parts";
    case SQDM_ERR_NON_POSITIVE_PART: return "part sizes must be positive";
    case SQDM_ERR_COFACTOR_SUM_ZERO: return "cofactor sum is zero";
    case SQDM_ERR_SINGULAR_DELTA: return "determinant is zero";
    case SQDM_ERR_SINGULAR_MATRIX: return "matrix is singular";
    case SQDM_ERR_NOT_SYMMETRIC: return "matrix is not symmetric";
    case SQDM_ERR_PARSE: return "parse error";
    case SQDM_ERR_CALLBACK_ABORTED: return "aborted by callback";
    case SQDM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sqdm_last_error(void) { return last_error.c_str(); }

void sqdm_string_free(char* str) { std::free(str); }

sqdm_status sqdm_partition_new(const int64_t* sizes, size_t count, sqdm_partition** out) {
  if (!out || (!sizes && count)) return null_argument();
  return guarded([&] {
    *out = new sqdm_partition{sqdm::Partition(std::span<const std::int64_t>(sizes, count))};
    return SQDM_OK;
  });
}

sqdm_status sqdm_partition_parse(const char* token, sqdm_partition** out) {
  if (!token || !out) return null_argument();
  return guarded([&] {
    *out = new sqdm_partition{sqdm::Partition::parse(token)};
    return SQDM_OK;
  });
}

void sqdm_partition_free(sqdm_partition* p) { delete p; }

size_t sqdm_partition_order(const sqdm_partition* p) { return p ? p->value.order() : 0; }
size_t sqdm_partition_parts(const sqdm_partition* p) { return p ? p->value.parts() : 0; }
size_t sqdm_partition_unit_parts(const sqdm_partition* p) { return p ? p->value.unit_parts() : 0; }

size_t sqdm_partition_sizes(const sqdm_partition* p, uint32_t* sizes, size_t capacity) {
  if (!p) return 0;
  const auto& v = p->value.sizes();
  const size_t n = std::min(capacity, v.size());
  if (sizes) std::copy_n(v.begin(), n, sizes);
  return v.size();
}

sqdm_status sqdm_partition_json(const sqdm_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_json(p->value).dump(), out); });
}

sqdm_status sqdm_info_json(const sqdm_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { return emit(sqdm::info_json(p->value).dump(), out); });
}

sqdm_status sqdm_det(const sqdm_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { return emit(sqdm::det_delta_closed(p->value).get_str(), out); });
}

sqdm_status sqdm_cof(const sqdm_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { return emit(sqdm::cof_delta_closed(p->value).get_str(), out); });
}

sqdm_status sqdm_lambda(const sqdm_partition* p, char** out) {
  if (!p || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_string(sqdm::lambda(p->value)), out); });
}

sqdm_status sqdm_classify(const sqdm_partition* p, int* det_zero, int* cof_zero) {
  if (!p) return null_argument();
  return guarded([&] {
    const auto c = sqdm::classify(p->value);
    if (det_zero) *det_zero = c.det_zero ? 1 : 0;
    if (cof_zero) *cof_zero = c.cof_zero ? 1 : 0;
    return SQDM_OK;
  });
}

sqdm_status sqdm_matrix_build(const sqdm_partition* p, sqdm_matrix_kind kind, sqdm_matrix** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    switch (kind) {
      case SQDM_MATRIX_DELTA: return emit_matrix(sqdm::build_delta(p->value), out);
      case SQDM_MATRIX_LAPLACIAN: return emit_matrix(sqdm::build_laplacian_like(p->value), out);
      case SQDM_MATRIX_INVERSE_BLOCK: return emit_matrix(sqdm::inverse_block_form(p->value), out);
      case SQDM_MATRIX_INVERSE_RANK_ONE: return emit_matrix(sqdm::inverse_rank_one(p->value), out);
      case SQDM_MATRIX_BFS: return emit_matrix(sqdm::bfs_distance_matrix(p->value), out);
    }
    return fail(SQDM_ERR_INVALID_ARGUMENT, "unknown matrix kind");
  });
}

void sqdm_matrix_free(sqdm_matrix* m) { delete m; }

size_t sqdm_matrix_order(const sqdm_matrix* m) { return m ? m->value.order() : 0; }

sqdm_status sqdm_matrix_entry(const sqdm_matrix* m, size_t row, size_t col, char** out) {
  if (!m || !out) return null_argument();
  if (row >= m->value.order() || col >= m->value.order()) {
    return fail(SQDM_ERR_INVALID_ARGUMENT, "index out of range");
  }
  return guarded([&] { return emit(sqdm::to_string(m->value(row, col)), out); });
}

sqdm_status sqdm_matrix_csv(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_csv(m->value), out); });
}

sqdm_status sqdm_matrix_json(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_json(m->value).dump(), out); });
}

sqdm_status sqdm_matrix_pretty(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_pretty(m->value), out); });
}

sqdm_status sqdm_matrix_multiply(const sqdm_matrix* a, const sqdm_matrix* b, sqdm_matrix** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { return emit_matrix(a->value * b->value, out); });
}

int sqdm_matrix_equal(const sqdm_matrix* a, const sqdm_matrix* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

int sqdm_matrix_is_identity(const sqdm_matrix* m) {
  return m && m->value == sqdm::RationalMatrix::identity(m->value.order()) ? 1 : 0;
}

sqdm_status sqdm_matrix_det(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_string(sqdm::det_bareiss(m->value)), out); });
}

sqdm_status sqdm_matrix_cofactor_sum(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_string(sqdm::cofactor_sum(m->value)), out); });
}

sqdm_status sqdm_matrix_rank(const sqdm_matrix* m, size_t* out) {
  if (!m || !out) return null_argument();
  return guarded([&] {
    *out = sqdm::rank(m->value);
    return SQDM_OK;
  });
}

sqdm_status sqdm_matrix_inverse(const sqdm_matrix* m, sqdm_matrix** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit_matrix(sqdm::inverse_gauss(m->value), out); });
}

sqdm_status sqdm_matrix_char_poly_json(const sqdm_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_json(sqdm::char_poly(m->value)).dump(), out); });
}

sqdm_status sqdm_matrix_inertia(const sqdm_matrix* m, size_t* positive, size_t* zero, size_t* negative) {
  if (!m) return null_argument();
  return guarded([&] {
    const auto in = sqdm::inertia(m->value);
    if (positive) *positive = in.positive;
    if (zero) *zero = in.zero;
    if (negative) *negative = in.negative;
    return SQDM_OK;
  });
}

sqdm_status sqdm_matrix_eigen_multiplicity(const sqdm_matrix* m, const char* mu, size_t* out) {
  if (!m || !mu || !out) return null_argument();
  return guarded([&] {
    *out = sqdm::eigen_multiplicity(m->value, sqdm::parse_rational(mu));
    return SQDM_OK;
  });
}

sqdm_status sqdm_verify(const sqdm_partition* p, sqdm_report** out) {
  if (!p || !out) return null_argument();
  return guarded([&] {
    *out = new sqdm_report{sqdm::verify_partition(p->value)};
    return SQDM_OK;
  });
}

void sqdm_report_free(sqdm_report* r) { delete r; }
size_t sqdm_report_check_count(const sqdm_report* r) { return r ? r->value.checks.size() : 0; }
size_t sqdm_report_failure_count(const sqdm_report* r) { return r ? r->value.failures() : 0; }
size_t sqdm_report_skipped_count(const sqdm_report* r) { return r ? r->value.skipped.size() : 0; }

sqdm_status sqdm_report_json(const sqdm_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { return emit(sqdm::to_json(r->value).dump(), out); });
}

sqdm_status sqdm_scan(size_t n_max, size_t workers, sqdm_line_callback callback, void* user_data,
                      size_t* failures) {
  if (!callback) return null_argument();
  if (n_max < 2) return fail(SQDM_ERR_INVALID_ARGUMENT, "max n must be at least 2");
  return guarded([&] {
    size_t reports = 0;
    size_t failed = 0;
    size_t checks = 0;
    size_t skipped = 0;
    bool aborted = false;
    sqdm::scan(n_max, workers ? workers : sqdm::default_workers(), [&](const sqdm::VerificationReport& r) {
      ++reports;
      checks += r.checks.size();
      skipped += r.skipped.size();
      if (!r.passed()) ++failed;
      if (!aborted && callback(sqdm::to_json(r).dump().c_str(), user_data) != 0) aborted = true;
    });
    if (failures) *failures = failed;
    if (aborted) return fail(SQDM_ERR_CALLBACK_ABORTED, "scan aborted by callback");
    const nlohmann::json summary = {{"type", "summary"},      {"max_n", n_max},     {"partitions", reports},
                                    {"checks_run", checks},   {"skipped", skipped}, {"failed_partitions", failed},
                                    {"passed", failed == 0}};
    if (callback(summary.dump().c_str(), user_data) != 0) {
      return fail(SQDM_ERR_CALLBACK_ABORTED, "scan aborted by callback");
    }
    return SQDM_OK;
  });
}

sqdm_status sqdm_conjecture_scan(size_t n_max, size_t workers, sqdm_line_callback callback, void* user_data,
                                 size_t* singular) {
  if (!callback) return null_argument();
  if (n_max < 2) return fail(SQDM_ERR_INVALID_ARGUMENT, "max n must be at least 2");
  return guarded([&] {
    const auto reports = sqdm::conjecture_scan(n_max, workers ? workers : sqdm::default_workers());
    size_t clause_i = 0;
    size_t clause_ii = 0;
    for (const auto& r : reports) {
      clause_i += r.clause_i_holds;
      clause_ii += r.clause_ii_holds;
      if (callback(sqdm::to_json(r).dump().c_str(), user_data) != 0) {
        return fail(SQDM_ERR_CALLBACK_ABORTED, "scan aborted by callback");
      }
    }
    if (singular) *singular = reports.size();
    const nlohmann::json summary = {{"type", "summary"},
                                    {"max_n", n_max},
                                    {"singular_partitions", reports.size()},
                                    {"conjecture_i_holds", clause_i},
                                    {"conjecture_ii_holds", clause_ii}};
    if (callback(summary.dump().c_str(), user_data) != 0) {
      return fail(SQDM_ERR_CALLBACK_ABORTED, "scan aborted by callback");
    }
    return SQDM_OK;
  });
}

}  // extern "C"
