#include "weylgerbe/error.hpp"

namespace weylgerbe {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidUnitary: return "InvalidUnitary";
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::InvalidTangent: return "InvalidTangent";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::FiberMismatch: return "FiberMismatch";
    case ErrorKind::OnBranchCut: return "OnBranchCut";
    case ErrorKind::NotInteger: return "NotInteger";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ChartOutOfRange: return "ChartOutOfRange";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
  }
  return "Unknown";
}

}  // namespace weylgerbe
