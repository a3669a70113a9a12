#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cbs {

// Two families of failures. A PreconditionError means the caller handed us
// something outside an operation's domain; a MathematicalFailure means the
// input was well formed but the claimed structure does not exist on it.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MathematicalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CBS_DEFINE_ERROR(Name, Base)        \
  class Name : public Base {                \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Base(#Name ": " + what) {}        \
  }

CBS_DEFINE_ERROR(ZeroPolynomial, PreconditionError);
CBS_DEFINE_ERROR(NonIntegerCoefficients, PreconditionError);
CBS_DEFINE_ERROR(PrimeDividesQ, PreconditionError);
CBS_DEFINE_ERROR(ParseError, PreconditionError);
CBS_DEFINE_ERROR(InvalidWeights, PreconditionError);
CBS_DEFINE_ERROR(UnsupportedType, PreconditionError);
CBS_DEFINE_ERROR(GroupTooLarge, PreconditionError);
CBS_DEFINE_ERROR(DatumMismatch, PreconditionError);
CBS_DEFINE_ERROR(SizeMismatch, PreconditionError);
CBS_DEFINE_ERROR(SizeTooLarge, PreconditionError);
CBS_DEFINE_ERROR(HypothesisViolated, PreconditionError);
CBS_DEFINE_ERROR(NotARepresentation, MathematicalFailure);
CBS_DEFINE_ERROR(NonIntegralSchurElement, MathematicalFailure);
CBS_DEFINE_ERROR(NegativeAInvariant, MathematicalFailure);
CBS_DEFINE_ERROR(ProductMismatch, MathematicalFailure);
CBS_DEFINE_ERROR(BetaNotUnique, MathematicalFailure);
CBS_DEFINE_ERROR(BasicSetsDiffer, MathematicalFailure);

#undef CBS_DEFINE_ERROR

/// Which clause of the canonical-basic-set definition failed for a column.
enum class NoCanonicalSetReason { Tie, MultiplicityNotOne, SecondConditionViolated };

inline const char* to_string(NoCanonicalSetReason r) {
  switch (r) {
    case NoCanonicalSetReason::Tie: return "tie";
    case NoCanonicalSetReason::MultiplicityNotOne: return "multiplicityNotOne";
    case NoCanonicalSetReason::SecondConditionViolated: return "secondConditionViolated";
  }
  return "unknown";
}

class NoCanonicalSet : public MathematicalFailure {
 public:
  NoCanonicalSet(std::size_t column, NoCanonicalSetReason reason, const std::string& detail)
      : MathematicalFailure("NoCanonicalSet(column " + std::to_string(column) + ", " +
                            to_string(reason) + "): " + detail),
        column_(column),
        reason_(reason) {}

  std::size_t column() const noexcept { return column_; }
  NoCanonicalSetReason reason() const noexcept { return reason_; }

 private:
  std::size_t column_;
  NoCanonicalSetReason reason_;
};

}  // namespace cbs
