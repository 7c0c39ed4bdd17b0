#pragma once

#include <stdexcept>

namespace wedder {

/// Thrown when an argument violates a documented precondition
/// (non-prime where a prime is required, non-unit residue, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation is outside what the library can decide
/// (for example 2-local indices of general cyclic cyclotomic algebras).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed field, group or command notation.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wedder
