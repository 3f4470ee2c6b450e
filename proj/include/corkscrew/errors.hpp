#pragma once

#include <stdexcept>
#include <string>

namespace corkscrew {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The cyclic reduction of a word is the identity.
class EmptyClass : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula or operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A cusp class (or a power of one) was passed where a hyperbolic class is required.
class PeripheralInput : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two classes that must be distinct are the same unoriented class.
class SameClass : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two axes have the same pair of endpoints.
class SharedAxis : public Error {
 public:
  using Error::Error;
};

// An invariant that the group theory guarantees was violated; indicates a bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class IncompleteSearch : public Error {
 public:
  using Error::Error;
};

}  // namespace corkscrew
