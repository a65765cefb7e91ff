#include "detkrs/error.hpp"

namespace detkrs {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonIncreasingIndices: return "NonIncreasingIndices";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ShapeExceedsAmbient: return "ShapeExceedsAmbient";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::EmptyTableau: return "EmptyTableau";
    case Errc::NotStandard: return "NotStandard";
    case Errc::WitnessPreconditionFailed: return "WitnessPreconditionFailed";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ComparablePair: return "ComparablePair";
    case Errc::TooManyGenerators: return "TooManyGenerators";
    case Errc::ShapeTooWide: return "ShapeTooWide";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::InvalidAmbient: return "InvalidAmbient";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace detkrs
