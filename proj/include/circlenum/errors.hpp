#pragma once

#include <stdexcept>
#include <string>

namespace circlenum {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed PD token.
struct syntax_error : error {
  using error::error;
};

// An arc label does not occur exactly twice, or is not positive.
struct label_error : error {
  using error::error;
};

// The operation needs a connected projection.
struct disconnected_error : error {
  using error::error;
};

// Face 2-coloring impossible; signals corrupt face data.
struct coloring_error : error {
  using error::error;
};

// Crossing index out of range (or repeated where a set is required).
struct index_error : error {
  using error::error;
};

// State length does not match the crossing count.
struct length_mismatch_error : error {
  using error::error;
};

// Enumeration would exceed the configured cap.
struct cap_exceeded_error : error {
  using error::error;
};

// The per-crossing switch system is unsolvable (invalid PD data).
struct constraint_error : error {
  using error::error;
};

// Bad pretzel parameters.
struct pretzel_error : error {
  using error::error;
};

}  // namespace circlenum
