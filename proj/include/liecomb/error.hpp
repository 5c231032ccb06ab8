#ifndef LIECOMB_ERROR_HPP
#define LIECOMB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecomb {

// Base class for all domain errors thrown by the library.  Usage errors
// (bad CLI arguments etc.) are not Errors; they are handled by the caller.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation restricted to a specific rank was called with another one.
struct RankError : Error {
  using Error::Error;
};

// A triple (lambda, mu, nu) violates triality conservation, so nu cannot
// occur in lambda (x) mu.  Layers above the weight arithmetic usually
// translate this into multiplicity 0 instead of letting it propagate.
struct NotInProduct : Error {
  using Error::Error;
};

// One or more of the nine honeycomb edge-orientation inequalities failed.
// `violated` lists (row, position) pairs indexing the 3x3 grouping of the
// inequality system.
struct InequalityViolation : Error {
  std::vector<std::pair<int, int>> violated;
  InequalityViolation(const std::string& msg, std::vector<std::pair<int, int>> v)
      : Error(msg), violated(std::move(v)) {}
};

// A pictograph step left the fiber of valid (non-negative) label sets.
struct StepOutOfFiber : Error {
  using Error::Error;
};

// Generic out-of-range argument (e.g. a hive parameter outside its interval).
struct OutOfRange : Error {
  using Error::Error;
};

}  // namespace liecomb

#endif
