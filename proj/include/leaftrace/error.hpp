#pragma once

#include <stdexcept>
#include <string>

namespace leaftrace {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad layer chains, shape mismatches, malformed config values.
struct ConfigError : Error {
  using Error::Error;
};

// Non-finite values where finite math is required.
struct NumericError : Error {
  using Error::Error;
};

// Thresholding / initialization found nothing to segment.
struct NoForeground : Error {
  using Error::Error;
};

// An iterative algorithm hit its hard cap without terminating.
struct NonConvergence : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace leaftrace
