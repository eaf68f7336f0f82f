#pragma once

#include <stdexcept>
#include <string>

namespace mombound {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad text/JSON, dimension mismatch, invalid parameters.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request the library understands but cannot serve (unsupported kind).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Floating-point stage failed: non-convergence, indefinite Gram matrix.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mombound
