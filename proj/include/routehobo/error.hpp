#pragma once

#include <stdexcept>
#include <string>

namespace routehobo {

/// Raised for invalid input data or violated preconditions. The CLI maps it
/// to exit code 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace routehobo
