#include "germdeform/error.hpp"

namespace germdeform {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::NoContraction: return "NoContraction";
    case ErrorCode::TruncationUnstable: return "TruncationUnstable";
    case ErrorCode::NotWeierstrass: return "NotWeierstrass";
    case ErrorCode::DegenerateGerm: return "DegenerateGerm";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularPairing: return "SingularPairing";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ContourTooClose: return "ContourTooClose";
    case ErrorCode::AliasingDetected: return "AliasingDetected";
    case ErrorCode::RootCountMismatch: return "RootCountMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IncompatibleRealStructure: return "IncompatibleRealStructure";
    case ErrorCode::SheetCollision: return "SheetCollision";
    case ErrorCode::SingularSheet: return "SingularSheet";
    case ErrorCode::ToleranceExceeded: return "ToleranceExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace germdeform
