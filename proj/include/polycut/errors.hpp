#ifndef POLYCUT_ERRORS_HPP
#define POLYCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycut {

/// Malformed arguments or inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vertex or facet that was named but is not present.
class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised by edge_flip when the requested flip would break the sphere.
class FlipIllegal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exhaustive cut oracle refuses graphs above its vertex limit.
class OracleScaleExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace polycut

#endif  // POLYCUT_ERRORS_HPP
