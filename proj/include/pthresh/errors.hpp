#pragma once

#include <stdexcept>
#include <string>

namespace pthresh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

// Structurally invalid input (bad ballot, too many names, empty profile).
struct ValidationError : Error {
  using Error::Error;
};

struct BudgetError : Error {
  using Error::Error;
};

// Result depends on a truncated outcome enumeration.
struct IndeterminateError : Error {
  using Error::Error;
};

struct AdamsIllDefined : DomainError {
  using DomainError::DomainError;
};

struct UnsupportedError : DomainError {
  using DomainError::DomainError;
};

}  // namespace pthresh
