#pragma once

#include <stdexcept>
#include <string>

namespace polyeuler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series division by a series whose first nonzero coefficient is not a
/// nonzero rational constant.
class LeadingCoefficientNotInvertible : public Error {
 public:
  using Error::Error;
};

/// Series division where the numerator vanishes to lower order than the
/// denominator.
class ValuationMismatch : public Error {
 public:
  using Error::Error;
};

/// Composition with an inner series whose constant term is nonzero.
class NonzeroInnerConstant : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested beyond the truncation order.
class OrderExceeded : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, polynomials, configuration).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyeuler
