#pragma once

#include <stdexcept>
#include <string>

namespace bethe {

// Each class maps to a distinct CLI exit status (see src/cli/commands.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BoundError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Raised whenever an operation would produce a loop/Yangian index at or past
/// the truncation bound of its context.
class TruncationOverflow : public Error {
 public:
  using Error::Error;
};

/// Preconditions on points/parameters: repeated evaluation points, χ on a
/// root hyperplane, rank drop of an ε-family, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bethe
