#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lexgotz {

/// Exact non-negative integer used for every count and binomial value.
using Natural = boost::multiprecision::cpp_int;

/// Malformed input or a violated precondition of a public operation.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit (enumeration, search or subset cap) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Resource limits shared by the enumeration-based routines.
struct Limits {
  // Largest |M_d| any routine may materialize.
  std::uint64_t enumeration_cap = 1'000'000;
  // Generator count above which the exhaustive linear-quotients search refuses to run.
  std::size_t exhaustive_generators = 64;
  // Subset states the exhaustive search may visit before giving up as inconclusive.
  std::uint64_t exhaustive_states = 2'000'000;
  // Generator count above which Taylor subset enumeration refuses to run.
  std::size_t taylor_generators = 16;

  /// Defaults, with `enumeration_cap` overridden by LEXGOTZ_ENUM_CAP when set.
  static Limits from_environment();
};

inline constexpr const char* kEnumCapVariable = "LEXGOTZ_ENUM_CAP";

/// Parses a decimal string of digits into a Natural; throws InvalidArgument otherwise.
Natural parse_natural(const std::string& text);

}  // namespace lexgotz
