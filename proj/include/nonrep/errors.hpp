#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace nonrep {

/// Raised when an argument lies outside an operation's domain
/// (symbol out of range, word too short, beta >= 2, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for unusable configurations. When the problem is a parameter that
/// is too small, `minimum()` carries the smallest admissible value.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what,
                       std::optional<long long> minimum = std::nullopt)
      : std::runtime_error(what), minimum_(minimum) {}

  std::optional<long long> minimum() const { return minimum_; }

 private:
  std::optional<long long> minimum_;
};

}  // namespace nonrep
