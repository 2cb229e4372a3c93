#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Malformed or out-of-range input (unknown point ids, bad files, bad flags).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction was called on inputs that fail its stated hypothesis.
/// `witness()` names the offending object (element index, point, pair).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& message, std::string witness)
      : std::runtime_error(message), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A property that follows from the hypotheses did not hold. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coarse
