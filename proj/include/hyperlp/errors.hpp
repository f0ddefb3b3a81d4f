#ifndef HYPERLP_ERRORS_HPP
#define HYPERLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperlp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certification could not conclude at the largest allowed precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// The leading coefficient of a polynomial straddles zero.
class AmbiguousDegree : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No sign change was found while bracketing a zero.
class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// A polynomial does not match the sequence window it claims to come from.
class WindowMismatch : public Error {
 public:
  using Error::Error;
};

/// Adjacent curve samples could not be matched even after step halving.
class BranchJumpDetected : public Error {
 public:
  using Error::Error;
};

/// Two curve families were sampled on different x grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// A sampled function changed sign where it was required not to.
class SignChangeDetected : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperlp

#endif  // HYPERLP_ERRORS_HPP
