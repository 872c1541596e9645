#include "gvcam/error.h"

namespace gvcam {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegenerateInput:
      return "DegenerateInput";
    case ErrorCode::kAmbiguousPencil:
      return "AmbiguousPencil";
    case ErrorCode::kInvalidN:
      return "InvalidN";
    case ErrorCode::kFocalPoint:
      return "FocalPoint";
    case ErrorCode::kUnsupportedOrder:
      return "UnsupportedOrder";
    case ErrorCode::kInvalidSlit:
      return "InvalidSlit";
    case ErrorCode::kIllConditioned:
      return "IllConditioned";
    case ErrorCode::kDegenerateCubic:
      return "DegenerateCubic";
    case ErrorCode::kDegenerateConfiguration:
      return "DegenerateConfiguration";
    case ErrorCode::kBaseLocus:
      return "BaseLocus";
    case ErrorCode::kSingularStack:
      return "SingularStack";
    case ErrorCode::kCoincidentCenters:
      return "CoincidentCenters";
    case ErrorCode::kIsotropicDirection:
      return "IsotropicDirection";
    case ErrorCode::kIsotropicPlane:
      return "IsotropicPlane";
    case ErrorCode::kNotOnSurface:
      return "NotOnSurface";
    case ErrorCode::kSingularPoint:
      return "SingularPoint";
    case ErrorCode::kIsotropicTangent:
      return "IsotropicTangent";
    case ErrorCode::kSingularIntersection:
      return "SingularIntersection";
    case ErrorCode::kFocalConfiguration:
      return "FocalConfiguration";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

void Throw(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gvcam
