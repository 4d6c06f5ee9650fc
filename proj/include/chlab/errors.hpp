#pragma once

#include <stdexcept>
#include <string>

namespace chlab {

// Input fails a structural precondition (loop arc, digon where an oriented
// graph is required, vertex out of range, ...). The kind string is a stable
// machine-checkable tag; the message is for humans.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string kind, const std::string& message = "")
      : std::runtime_error(message.empty() ? kind : kind + ": " + message),
        kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Numeric argument outside the domain of a formula or parameter frame.
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad CLI usage or an unknown identifier.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource budget ran out before the computation finished.
class BudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chlab
