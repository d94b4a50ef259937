#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace germdeform {

enum class ErrorCode {
  InvalidInput,
  ZeroLeadingCoefficient,
  NoContraction,
  TruncationUnstable,
  NotWeierstrass,
  DegenerateGerm,
  RankDeficient,
  SingularPairing,
  OutOfDomain,
  ContourTooClose,
  AliasingDetected,
  RootCountMismatch,
  NotSymmetric,
  IncompatibleRealStructure,
  SheetCollision,
  SingularSheet,
  ToleranceExceeded,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the named codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace germdeform
