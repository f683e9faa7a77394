#pragma once

#include <stdexcept>
#include <string>

namespace netform {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NodeOutOfRange : public Error {
 public:
  using Error::Error;
};

class EdgeAlreadyPresent : public Error {
 public:
  using Error::Error;
};

class EdgeAbsent : public Error {
 public:
  using Error::Error;
};

class NotGraphical : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration requested beyond the edge-slot cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A game or cost function whose parameters violate its invariants.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A cost function evaluated outside the set where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A common-shape check was asked of firms whose cost shapes differ.
class HeterogeneousShape : public Error {
 public:
  using Error::Error;
};

/// The graph handed to a target-sequence analysis does not realize the targets.
class NotRealizingTarget : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace netform
