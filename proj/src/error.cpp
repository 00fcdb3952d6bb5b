#include "packlab/error.hpp"

namespace packlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument:
      return "InvalidArgument";
    case Errc::kEmptyInput:
      return "EmptyInput";
    case Errc::kNonUnitColumn:
      return "NonUnitColumn";
    case Errc::kTooFewVectors:
      return "TooFewVectors";
    case Errc::kNotPsd:
      return "NotPsd";
    case Errc::kRankExceedsD:
      return "RankExceedsD";
    case Errc::kNotTight:
      return "NotTight";
    case Errc::kNoComplement:
      return "NoComplement";
    case Errc::kAlreadyReal:
      return "AlreadyReal";
    case Errc::kNotEtf:
      return "NotEtf";
    case Errc::kNotStronglyRegular:
      return "NotStronglyRegular";
    case Errc::kNoPrime:
      return "NoPrime";
    case Errc::kNotPrime:
      return "NotPrime";
    case Errc::kOrderUnavailable:
      return "OrderUnavailable";
    case Errc::kNoRealRoots:
      return "NoRealRoots";
    case Errc::kDegreeTooLarge:
      return "DegreeTooLarge";
    case Errc::kTooManyBases:
      return "TooManyBases";
    case Errc::kOutOfGerzonRange:
      return "OutOfGerzonRange";
    case Errc::kPrimeUnavailable:
      return "PrimeUnavailable";
    case Errc::kDegenerateK:
      return "DegenerateK";
    case Errc::kZeroCoherence:
      return "ZeroCoherence";
    case Errc::kTooLarge:
      return "TooLarge";
    case Errc::kSingularInput:
      return "SingularInput";
    case Errc::kInconsistentForm:
      return "InconsistentForm";
    case Errc::kUnknownFormat:
      return "UnknownFormat";
    case Errc::kDimensionMismatch:
      return "DimensionMismatch";
    case Errc::kNotSpanning:
      return "NotSpanning";
    case Errc::kConferenceCase:
      return "ConferenceCase";
    case Errc::kBoundViolated:
      return "BoundViolated";
    case Errc::kNonIntegralEigenvalue:
      return "NonIntegralEigenvalue";
    case Errc::kWrongRatio:
      return "WrongRatio";
    case Errc::kBadTheta:
      return "BadTheta";
    case Errc::kZeroY:
      return "ZeroY";
    case Errc::kBadUniformity:
      return "BadUniformity";
    case Errc::kBadIntersections:
      return "BadIntersections";
    case Errc::kBadVectorNorms:
      return "BadVectorNorms";
    case Errc::kUnsupportedQ:
      return "UnsupportedQ";
    case Errc::kInvalidZ:
      return "InvalidZ";
    case Errc::kHalfCase:
      return "HalfCase";
    case Errc::kUnknownKey:
      return "UnknownKey";
    case Errc::kMissingExternalData:
      return "MissingExternalData";
    case Errc::kUnsupportedD:
      return "UnsupportedD";
    case Errc::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace packlab
