#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramify {

/// Base class for every error raised by the library. Carries the name of the
/// stage (operation) that failed so command-line reports can point at it.
class Error : public std::runtime_error {
 public:
  Error(std::string_view stage, const std::string& message)
      : std::runtime_error(std::string(stage) + ": " + message), stage_(stage) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// Malformed or out-of-contract input supplied by the caller.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine was asked to run beyond its size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the mathematics guarantees did not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// True when RAMIFY_GUARD_OVERRIDE is set to a non-empty value other than "0".
bool guards_lifted();

/// Throws GuardError when `value > limit`, unless guards are lifted.
void enforce_guard(std::string_view stage, std::string_view quantity,
                   std::size_t value, std::size_t limit);

}  // namespace ramify
