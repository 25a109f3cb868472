#include "kpack/error.hpp"

namespace kpack {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::OddParts: return "OddParts";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::TooManyRows: return "TooManyRows";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace kpack
