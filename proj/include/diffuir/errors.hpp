#pragma once

#include <stdexcept>
#include <string>

namespace diffuir {

// Invalid configuration value (bad field, unknown key, out-of-range setting).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor shape mismatch between operands.
struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Timestep or subscript outside the valid range.
struct index_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation undefined for the given inputs (e.g. division by a zero coefficient).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File system failure: missing path, unreadable or unwritable file.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint file malformed or incompatible with the requested architecture.
struct checkpoint_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value where the algorithm requires finite arithmetic.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace diffuir
