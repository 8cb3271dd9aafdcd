#pragma once

#include <stdexcept>
#include <string>

namespace durfee {

// Raised when an operation is applied outside its precondition set
// (wrong flavor, non-strict-shifted input, rank mismatch, pole, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace durfee
