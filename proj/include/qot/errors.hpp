#ifndef QOT_ERRORS_HPP
#define QOT_ERRORS_HPP

#include <stdexcept>

namespace qot {

// Invalid argument values or violated invariants on domain objects.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical integration failed to reach the requested tolerance within its
// node budget. Kept distinct from DomainError so callers can tell "bad input"
// from "integrator gave up".
struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario/config text could not be parsed, or contains unknown keys.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model registry problems: duplicate registration or unknown model name.
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem and CSV read/write problems.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qot

#endif  // QOT_ERRORS_HPP
