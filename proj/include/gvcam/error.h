#pragma once

#include <stdexcept>
#include <string>

namespace gvcam {

enum class ErrorCode {
  kDegenerateInput,
  kAmbiguousPencil,
  kInvalidN,
  kFocalPoint,
  kUnsupportedOrder,
  kInvalidSlit,
  kIllConditioned,
  kDegenerateCubic,
  kDegenerateConfiguration,
  kBaseLocus,
  kSingularStack,
  kCoincidentCenters,
  kIsotropicDirection,
  kIsotropicPlane,
  kNotOnSurface,
  kSingularPoint,
  kIsotropicTangent,
  kSingularIntersection,
  kFocalConfiguration,
  kParseError,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Throw(ErrorCode code, const std::string& message);

}  // namespace gvcam
