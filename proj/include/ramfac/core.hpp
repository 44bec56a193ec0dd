#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace ramfac {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Error hierarchy. Every failure mode named by an operation contract maps to
// one of these; callers that only care about "something was wrong with the
// input" can catch ramfac::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RankError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class DegenerateNormError : public Error {
 public:
  using Error::Error;
};

class InvalidHeightError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parses "a", "-a", "a/b" or a finite decimal ("0.25") into an exact rational.
Rational parse_rational(const std::string& text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace ramfac
