#ifndef QEULER_ERRORS_HPP
#define QEULER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qeuler {

// Base of every error the library throws.
struct Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : public Error {
  ZeroDenominator() : Error("zero denominator") {}
};

struct DivisionByZero : public Error {
  DivisionByZero() : Error("division by zero") {}
};

struct PoleAtPoint : public Error {
  explicit PoleAtPoint(const std::string& where)
      : Error("denominator vanishes at q = " + where) {}
};

struct PoleAtZero : public Error {
  PoleAtZero() : Error("denominator vanishes at q = 0; no power series expansion") {}
};

struct IndexOutOfRange : public Error {
  using Error::Error;
};

// s2_transform left a lambda-dependent term behind.
struct LambdaResidue : public Error {
  using Error::Error;
};

struct DenominatorNotUnit : public Error {
  using Error::Error;
};

struct BudgetExceeded : public Error {
  using Error::Error;
};

struct InvalidArgument : public Error {
  using Error::Error;
};

struct ParseError : public Error {
  using Error::Error;
};

}  // namespace qeuler

#endif  // QEULER_ERRORS_HPP
