#pragma once

#include <stdexcept>
#include <string>

namespace houghton {

// Malformed input, arity mismatch, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A search exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace houghton
