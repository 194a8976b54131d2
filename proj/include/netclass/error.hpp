#pragma once

#include <stdexcept>
#include <string>

namespace netclass {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration: out-of-range parameter, unknown option value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Rejected input data: malformed CSV, non-finite values, dimension mismatch,
/// degenerate classes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a model file whose cached
/// baselines no longer match its samples).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace netclass
