#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepaut {

// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t position)
      : Error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotSeparatedError : public Error {
 public:
  explicit NotSeparatedError(std::string variable)
      : Error("variable '" + variable + "' occurs in more than one monomial"),
        variable_(std::move(variable)) {}

  std::string const& variable() const { return variable_; }

 private:
  std::string variable_;
};

class ConstantTermError : public Error {
 public:
  ConstantTermError()
      : Error("polynomial has a constant term; separated form requires "
              "every term to contain a variable") {}
};

class SingleMonomialError : public Error {
 public:
  SingleMonomialError()
      : Error("polynomial has a single monomial; its zero set is a union of "
              "coordinate hyperplanes") {}
};

class EnumerationTooLargeError : public Error {
 public:
  using Error::Error;
};

class TooManyVariablesError : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphismError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepaut
