#pragma once

#include <stdexcept>
#include <string>

namespace starq {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A series coefficient a_n < 0 where the class requires a_n >= 0.
class NegativeCoefficient : public Error {
 public:
  NegativeCoefficient(int n, double value)
      : Error("coefficient a_" + std::to_string(n) + " = " + std::to_string(value) +
              " violates a_n >= 0"),
        index(n) {}
  int index;
};

// Truncation orders of two objects are incompatible for the operation.
class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

// Convex/extreme-point weights fail nonnegativity or normalization.
class BadWeights : public Error {
 public:
  using Error::Error;
};

// An operator weight came out nonpositive or non-finite at index n.
class NonPositiveWeight : public Error {
 public:
  NonPositiveWeight(int n, double value)
      : Error("operator weight at n = " + std::to_string(n) + " is " +
              std::to_string(value) + "; weights must be positive and finite"),
        index(n) {}
  int index;
};

// A q-Pochhammer denominator factor vanished within the working range.
class DenominatorZero : public Error {
 public:
  explicit DenominatorZero(int term)
      : Error("denominator q-Pochhammer factor vanishes at term " + std::to_string(term)),
        index(term) {}
  int index;
};

// An infinite product or series did not settle within the allotted terms.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// A closed-form denominator is zero or of the wrong sign.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
  DegenerateDenominator(int n, const std::string& what)
      : Error(what), index(n) {}
  int index = -1;
};

// Every sample point of a grid was excluded by the evaluation guard.
class AllPointsExcluded : public Error {
 public:
  using Error::Error;
};

}  // namespace starq
