#pragma once

#include <stdexcept>
#include <string>

namespace osculo {

// Invalid caller-supplied data: malformed files, bad parameters, violated
// preconditions. Maps to CLI exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A verified internal identity failed. Indicates a bug or a breached
// invariant, never bad input. Maps to CLI exit code 2.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace osculo
