#include "ramify/error.hpp"

#include <cstdlib>

namespace ramify {

bool guards_lifted() {
  const char* value = std::getenv("RAMIFY_GUARD_OVERRIDE");
  return value != nullptr && *value != '\0' && std::string_view(value) != "0";
}

void enforce_guard(std::string_view stage, std::string_view quantity,
                   std::size_t value, std::size_t limit) {
  if (value <= limit || guards_lifted()) return;
  throw GuardError(stage, std::string(quantity) + " = " + std::to_string(value) +
                              " exceeds the guard of " + std::to_string(limit) +
                              " (set RAMIFY_GUARD_OVERRIDE=1 to lift)");
}

}  // namespace ramify
