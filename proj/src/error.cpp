#include "cpv/error.hpp"

namespace cpv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidBarcode: return "InvalidBarcode";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::NonUniqueSnap: return "NonUniqueSnap";
    case ErrorKind::EmptyHorizon: return "EmptyHorizon";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OnSpectrum: return "OnSpectrum";
    case ErrorKind::InPiSpan: return "InPiSpan";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cpv
