#include "symdyn/error.hpp"

namespace symdyn {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyShift: return "EmptyShift";
    case ErrorKind::NotEssential: return "NotEssential";
    case ErrorKind::PartialBlockMap: return "PartialBlockMap";
    case ErrorKind::BracketUndefined: return "BracketUndefined";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::StateBlowup: return "StateBlowup";
    case ErrorKind::SymbolNotInSubset: return "SymbolNotInSubset";
    case ErrorKind::NotAllowedPoint: return "NotAllowedPoint";
    case ErrorKind::NonUniformRelation: return "NonUniformRelation";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::InfinitePreimage: return "InfinitePreimage";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::NotResolving: return "NotResolving";
    case ErrorKind::Rho1NotInjective: return "Rho1NotInjective";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NonConstant: return "NonConstant";
    case ErrorKind::NotFiniteToOne: return "NotFiniteToOne";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::NonUniqueV: return "NonUniqueV";
    case ErrorKind::AmbiguousComponent: return "AmbiguousComponent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

}  // namespace symdyn
