#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pel {

/// Base of every library error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// series engine
class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};
class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};
class OrderExceeded : public Error {
 public:
  using Error::Error;
};

// symmetrized / multi families
class RankTooSmall : public Error {
 public:
  using Error::Error;
};

// checker
class UnknownSuite : public Error {
 public:
  using Error::Error;
};
class InvalidGrid : public Error {
 public:
  using Error::Error;
};
class UnknownFamily : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized value; `location()` is a JSON-pointer-like path.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace pel
