#include "hsgeo/error.hpp"

namespace hsgeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NotIntegrable: return "NotIntegrable";
    case ErrorKind::TailNotSettled: return "TailNotSettled";
    case ErrorKind::TailTooLarge: return "TailTooLarge";
    case ErrorKind::RangeExceedsWindow: return "RangeExceedsWindow";
    case ErrorKind::DerivativeTooSmall: return "DerivativeTooSmall";
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::BranchCutAmbiguity: return "BranchCutAmbiguity";
    case ErrorKind::PastBlowup: return "PastBlowup";
    case ErrorKind::SolitonBlowup: return "SolitonBlowup";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::AntipodalPoints: return "AntipodalPoints";
    case ErrorKind::PositivityLost: return "PositivityLost";
    case ErrorKind::Breakdown: return "Breakdown";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hsgeo
