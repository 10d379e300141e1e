#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilzeta {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed algebra description (bad partition, zero exponent, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of an operation: a symbol that is
// not in the basis, elements over different algebras, a zero element
// where a leading term is requested.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed a configured resource cap (slice degree,
// basis size) or is outside the numerically supported regime.
class LimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& what)
      : Error(what + " at position " + std::to_string(position) + " (expected " +
              expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace nilzeta
