#pragma once

#include <stdexcept>
#include <string>

namespace eulerlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad document, bad polynomial text, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not live in the same ring (field or variable count mismatch).
class StructuralError : public InputError {
 public:
  using InputError::InputError;
};

/// A search or enumeration would exceed the supported size.
class ResourceError : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical hypothesis of a theorem is not satisfied by the data.
/// The message names the violated condition.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// A map part handed to the join construction does not land on the unit sphere.
class AssemblyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulerlab
