#pragma once

#include <stdexcept>
#include <string>

namespace kwaycut {

// Bad caller input: malformed files, unknown ids, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal invariant failed. Always indicates a bug or an unsound
// custom profile, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kwaycut
