#ifndef NORDEN_ERRORS_HPP
#define NORDEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace norden {

/// Malformed or inconsistent user input (bad dimensions, bad files, bad flags).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operator fails its algebraic law (e.g. a complex structure with J^2 != -I).
struct structure_error : std::runtime_error {
  explicit structure_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A bilinear form fails a metric requirement (symmetry, anti-isometry, signature).
struct metric_error : std::runtime_error {
  explicit metric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was invoked outside its stated domain.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A proved equivalence failed on concrete data. Must never fire; firing
/// means an implementation bug, and tests treat it as a hard failure.
struct theorem_violation : std::runtime_error {
  explicit theorem_violation(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken internal invariant (singular system that theory says is regular, ...).
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace norden

#endif
