#pragma once

#include <stdexcept>
#include <string>

namespace orbitspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document: bad JSON, unknown keys, malformed ids.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data that violates its precondition
/// (unknown id, wrong model shape, missing annotation, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The model data is internally inconsistent in a way only discovered while
/// computing (e.g. a limit set straddling two Morse sets).
class ModelInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitspace
