#ifndef SYMDYN_ERROR_HPP
#define SYMDYN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdyn {

// Every failure the library reports is one of these kinds. The C API maps
// them one-to-one onto sd_status codes, so keep the order stable.
enum class ErrorKind {
  InvalidArgument = 1,
  EmptyShift,
  NotEssential,
  PartialBlockMap,
  BracketUndefined,
  AlphabetMismatch,
  StateBlowup,
  SymbolNotInSubset,
  NotAllowedPoint,
  NonUniformRelation,
  NotInImage,
  InfinitePreimage,
  EmptyFiber,
  NotResolving,
  Rho1NotInjective,
  HypothesisFailed,
  NonConstant,
  NotFiniteToOne,
  CapExceeded,
  WindowTooSmall,
  WindowMismatch,
  Mismatch,
  NotPermutation,
  NonUniqueV,
  AmbiguousComponent,
  ParseError,
  UnknownName,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace symdyn

#endif  // SYMDYN_ERROR_HPP
