#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpkit {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(std::string const& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class NotPrime : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// Dedekind's criterion needs the equation order to be maximal.
class NonSquarefreeDiscriminant : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// An epimorphism count not divisible by the automorphism group order.
class NonDivisible : public Error {
public:
  using Error::Error;
};

// A resource cap (coset limit, node budget, element budget) was hit. The
// computation did not produce a partial answer.
class ResourceError : public Error {
public:
  using Error::Error;
};

class LimitExceeded : public ResourceError {
public:
  using ResourceError::ResourceError;
};

class BudgetExceeded : public ResourceError {
public:
  using ResourceError::ResourceError;
};

}  // namespace grpkit
