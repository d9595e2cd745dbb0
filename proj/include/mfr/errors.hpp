#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mfr {

  /// Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Presentation input and validation.
  class ParseError : public Error {
    using Error::Error;
  };
  class EmptyAlphabet : public Error {
    using Error::Error;
  };
  class DuplicateAtomName : public Error {
    using Error::Error;
  };
  class UnknownAtom : public Error {
    using Error::Error;
  };
  class NonHomogeneousRelation : public Error {
   public:
    NonHomogeneousRelation(std::string what, std::string relation)
        : Error(std::move(what)), relation_(std::move(relation)) {}
    std::string const& relation() const noexcept {
      return relation_;
    }

   private:
    std::string relation_;
  };

  // Resource caps. All of these signal pathological inputs.
  class CapExceeded : public Error {
    using Error::Error;
  };
  class ClassSizeExceeded : public CapExceeded {
    using CapExceeded::CapExceeded;
  };
  class BasicClosureDiverges : public CapExceeded {
    using CapExceeded::CapExceeded;
  };
  class NodeCapExceeded : public CapExceeded {
    using CapExceeded::CapExceeded;
  };
  class SubsetBlowup : public CapExceeded {
    using CapExceeded::CapExceeded;
  };

  // Evidence that the monoid is not a gcd-monoid.
  class NotGcdMonoid : public Error {
    using Error::Error;
  };
  class AmbiguousQuotient : public NotGcdMonoid {
    using NotGcdMonoid::NotGcdMonoid;
  };
  class NotConditionalLcm : public NotGcdMonoid {
    using NotGcdMonoid::NotGcdMonoid;
  };

  class NotADivisor : public Error {
    using Error::Error;
  };
  class SupportIllDefined : public Error {
    using Error::Error;
  };
  class NotArtinTits : public Error {
    using Error::Error;
  };

  class LevelOutOfRange : public Error {
    using Error::Error;
  };
  class TrivialElement : public Error {
    using Error::Error;
  };
  class IrreducibilityAssertionFailed : public Error {
    using Error::Error;
  };

  /// Raised when a maximal reduction needs a common multiple that does not
  /// exist. The witness holds canonical words rendered with atom names.
  class ThreeOreViolation : public Error {
   public:
    ThreeOreViolation(std::string what, std::vector<std::string> witness)
        : Error(std::move(what)), witness_(std::move(witness)) {}
    std::vector<std::string> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::vector<std::string> witness_;
  };

  class InconsistentTrace : public Error {
    using Error::Error;
  };
  class BadDepth : public Error {
    using Error::Error;
  };

}  // namespace mfr
