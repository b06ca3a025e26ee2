#ifndef BRAID_ERRORS_HPP
#define BRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braid {

// Bad user input: malformed words, out-of-range generator indices,
// strand-count mismatches between operands.
struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured cap (set members, search states) was exceeded.
struct ResourceCapExceeded : std::runtime_error {
  explicit ResourceCapExceeded(const std::string& msg)
      : std::runtime_error(msg) {}
};

// An operation was called outside its domain (negative braid where a
// positive one is required, non-round image family, inconsistent
// decomposition data).
struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace braid

#endif
