#pragma once

#include <stdexcept>
#include <string>

namespace antirotor {

// Malformed input or a call that violates an operation's preconditions.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically valid request that has no answer for this input
// (no unit, singular K, no generic inverse, pole on the path, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A post-condition that the library re-checks did not hold.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antirotor
