#pragma once

#include <stdexcept>
#include <string>

namespace sqdm {

enum class ErrorCode {
  EmptyOrSingletonPartition,
  NonPositivePart,
  CofactorSumZero,
  SingularDelta,
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  Parse,
};

/// Exception carrying one of the library's domain error codes. The C API
/// translates these into status values one to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sqdm
