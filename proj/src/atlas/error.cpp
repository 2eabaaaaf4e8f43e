#include "atlas/error.hpp"

namespace atlas {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NonPrimitivePoly: return "NonPrimitivePoly";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::SamePoint: return "SamePoint";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::DegenerateEmbedding: return "DegenerateEmbedding";
    case Errc::NotClosedSurface: return "NotClosedSurface";
    case Errc::TooLarge: return "TooLarge";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::Timeout: return "Timeout";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ConsistencyError: return "ConsistencyError";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace atlas
