#pragma once

#include <stdexcept>
#include <string>

namespace mfao {

/// Raised for invalid arguments: bad mode index, pinned angle supplied, etc.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an operator cannot be expanded on the fixed operator basis.
class DecompositionError : public std::runtime_error {
 public:
  explicit DecompositionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfao
