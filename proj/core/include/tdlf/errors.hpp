#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdlf {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// +inf + -inf, or another operation with no value in Z ∪ {±inf}.
class IndeterminateForm : public Error {
 public:
  using Error::Error;
};

class IncompatiblePrimes : public Error {
 public:
  using Error::Error;
};

/// Equal-characteristic operand mixed with a mixed-characteristic one.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Not enough digits or coefficients are known to certify the answer.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NonAdmissibleSequence : public Error {
 public:
  using Error::Error;
};

class NotCompactoid : public NonAdmissibleSequence {
 public:
  using NonAdmissibleSequence::NonAdmissibleSequence;
};

class NotBounded : public NonAdmissibleSequence {
 public:
  using NonAdmissibleSequence::NonAdmissibleSequence;
};

class NonConvergentValues : public NonAdmissibleSequence {
 public:
  using NonAdmissibleSequence::NonAdmissibleSequence;
};

class NonRepresentableTail : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class WindowInsufficient : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a literal; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tdlf
