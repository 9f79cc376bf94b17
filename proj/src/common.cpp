#include "lexgotz/common.hpp"

#include <cstdlib>
#include <limits>

namespace lexgotz {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* raw = std::getenv(kEnumCapVariable); raw != nullptr && *raw != '\0') {
    const Natural cap = parse_natural(raw);
    if (cap == 0 || cap > std::numeric_limits<std::uint64_t>::max()) {
      throw InvalidArgument(std::string(kEnumCapVariable) + " must be a positive 64-bit integer");
    }
    limits.enumeration_cap = static_cast<std::uint64_t>(cap);
  }
  return limits;
}

Natural parse_natural(const std::string& text) {
  if (text.empty()) throw InvalidArgument("expected a non-negative integer, got an empty string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw InvalidArgument("expected a non-negative integer, got '" + text + "'");
    }
  }
  return Natural(text);
}

}  // namespace lexgotz
