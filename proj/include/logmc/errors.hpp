#pragma once

#include <stdexcept>
#include <string>

namespace logmc {

/// Bad input: malformed files, violated preconditions. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An identity that must hold exactly failed (route disagreement, a division
/// that should have been exact). CLI exit code 2.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& what, std::string diagnostic = {})
      : std::runtime_error(what), diagnostic_(std::move(diagnostic)) {}

  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  std::string diagnostic_;
};

}  // namespace logmc
