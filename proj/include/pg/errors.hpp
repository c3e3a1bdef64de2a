#pragma once

#include <stdexcept>
#include <string>

namespace pg {

/// Malformed or out-of-range input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix shape mismatch.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A verification stage found the data inconsistent (CLI exit code 1).
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string check, const std::string& witness)
      : std::runtime_error(check + ": " + witness), check_(std::move(check)) {}
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

}  // namespace pg
