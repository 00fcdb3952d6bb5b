#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace packlab {

// Every failure mode the library reports. Operations throw packlab::Error
// carrying one of these codes; callers branch on code(), not on the message.
enum class Errc {
  kInvalidArgument,
  // frames
  kEmptyInput,
  kNonUnitColumn,
  kTooFewVectors,
  kNotPsd,
  kRankExceedsD,
  kNotTight,
  kNoComplement,
  kAlreadyReal,
  kNotEtf,
  kNotStronglyRegular,
  // algebra
  kNoPrime,
  kNotPrime,
  kOrderUnavailable,
  kNoRealRoots,
  // weil
  kDegreeTooLarge,
  kTooManyBases,
  kOutOfGerzonRange,
  kPrimeUnavailable,
  kDegenerateK,
  // secure
  kZeroCoherence,
  kTooLarge,
  kSingularInput,
  kInconsistentForm,
  kUnknownFormat,
  // certify
  kDimensionMismatch,
  kNotSpanning,
  kConferenceCase,
  kBoundViolated,
  kNonIntegralEigenvalue,
  kWrongRatio,
  kBadTheta,
  kZeroY,
  // incidence
  kBadUniformity,
  kBadIntersections,
  kBadVectorNorms,
  kUnsupportedQ,
  kInvalidZ,
  kHalfCase,
  // catalog
  kUnknownKey,
  kMissingExternalData,
  kUnsupportedD,
  // io
  kParseError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace packlab
