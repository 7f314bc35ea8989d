#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conevol {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation was given arguments outside its domain
/// (zero denominator, p < 1, samples < 2, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Two pi-graded scalars were combined at incompatible grades, or a product
/// would leave the supported grade range {0, 1, 2}. Always a formula-assembly
/// bug in the caller, never a data problem.
class GradeError : public Error {
public:
  using Error::Error;
};

/// Malformed input text. Carries the byte offset of the offending character.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// The requested cone angle lies outside the open window in which a
/// spherical structure is asserted, and evaluation was not forced.
class NotAssertedError : public Error {
public:
  using Error::Error;
};

/// A finite-difference stencil left the existence window; the caller should
/// shrink the step or move the sample point.
class SamplingError : public Error {
public:
  using Error::Error;
};

}  // namespace conevol
