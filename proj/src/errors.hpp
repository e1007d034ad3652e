#pragma once

#include <stdexcept>
#include <string>

namespace compack {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  NoSolution,
  Internal,
  UnknownClass,
  EmptyWord,
  Overlap,
  Parse,
  DescriptorMismatch,
  IndependentSet,
  AdjacentSmallLayers,
  InvalidTiling,
  NonCompact,
  Aperiodic,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

// All failures in the core surface as this exception; the C API maps the code
// onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compack
