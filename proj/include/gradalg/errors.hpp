// SPDX-License-Identifier: Apache-2.0

#ifndef GRADALG_ERRORS_HPP
#define GRADALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gradalg {

/// Bad user input: malformed text, violated preconditions, out-of-range
/// arguments. `location()` names the offending column, line, or flag.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::string location = {})
      : std::runtime_error(message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gradalg

#endif  // GRADALG_ERRORS_HPP
