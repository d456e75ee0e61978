#pragma once

#include <stdexcept>
#include <string>

namespace schub {

// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input.
struct parse_error : error {
  using error::error;
};

// Structurally valid input that violates an operation's preconditions
// (dimension mismatch, invalid Lehmer code, malformed partition, ...).
struct invalid_input_error : error {
  using error::error;
};

// A certificate or scan names a modulus that fails the primality check.
struct composite_prime_error : error {
  using error::error;
};

// A permutation rank exceeded the configured bound.
struct rank_bound_error : error {
  using error::error;
};

// An exhaustive scan would evaluate more points than the configured budget.
struct budget_error : error {
  using error::error;
};

// Filesystem failure.
struct io_error : error {
  using error::error;
};

// An arithmetic self-check failed.  Indicates a bug, never a user error.
struct internal_error : error {
  using error::error;
};

}  // namespace schub
