#pragma once

#include <stdexcept>
#include <string>

namespace modhodge {

/// Operands live in rings with different numbers of variables.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation (negative modulus
/// exponent, index outside the support, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient has a pole along a variable that is not in the modulus
/// support, so the form is not a section of Omega over A[1/f].
class NotAmbientError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The input is not an element of the module the caller claimed it was in.
class MembershipError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Operation requires an input shape the library does not handle
/// (non-monomial dlog argument, ...).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Geometric precondition of a construction is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace modhodge
