#pragma once

#include <stdexcept>
#include <string>

namespace curvesos {

enum class ErrorCode {
  ZeroPolynomial,
  EndpointIsRoot,
  NotSquarefree,
  DegenerateInput,
  NotHomogeneousDegree2,
  ParseError,
  CommonComponent,
  UnresolvedPoint,
  PointNotOnCurve,
  IrrationalPoint,
  ConstantFactor,
  InvalidInput,
  UnknownAdjacency,
  PreconditionViolated,
  NotPsd,
  NumericFailure,
  ValueMismatch,
  NotPsdOnComponent,
  Inconclusive,
  ValueNormMismatch,
  IrrationalAttachment,
  NoRationalAbscissa,
  NoLinearMultiplier,
  Unsupported,
  UnsupportedComponent,
  NoConvergence,
  RationalizationFailed,
  CompactSet,
  NotATree,
  NotConnected,
  UnsupportedComponentKind,
  FibreNotCurve,
  Refused,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace curvesos
