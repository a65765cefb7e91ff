#pragma once

#include <stdexcept>
#include <string>

namespace detkrs {

/// Error codes used across the library. Every throwing operation documents
/// which codes it can raise.
enum class Errc {
  NonIncreasingIndices,
  IndexOutOfRange,
  LengthMismatch,
  ShapeExceedsAmbient,
  DegreeBoundExceeded,
  EmptyTableau,
  NotStandard,
  WitnessPreconditionFailed,
  InvalidShape,
  ZeroPolynomial,
  ComparablePair,
  TooManyGenerators,
  ShapeTooWide,
  NotSymmetric,
  InvalidAmbient,
  ParseError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace detkrs
