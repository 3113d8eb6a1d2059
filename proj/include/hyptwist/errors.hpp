#pragma once

#include <stdexcept>
#include <string>

namespace hyptwist {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Raised when a prime lies in the bad set of a curve (or divides its leading coefficient).
class BadPrime : public Error {
public:
  using Error::Error;
};

class ResourceLimit : public Error {
public:
  using Error::Error;
};

class UnknownFactorization : public Error {
public:
  using Error::Error;
};

class UnknownProfile : public Error {
public:
  using Error::Error;
};

class ParseError : public InvalidInput {
public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

}  // namespace hyptwist
