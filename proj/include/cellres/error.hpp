#pragma once

#include <stdexcept>
#include <string>

namespace cellres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad JSON, schema violations, unparsable ideals,
/// size limits exceeded.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace cellres
