#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ulrichlab {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Binomial coefficient C(a, b) for a >= 0, with C(a, b) = 0 when a < b.
/// Negative tops are rejected; negative twists go through duality instead.
inline BigInt binom(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binom: negative top argument " + std::to_string(a));
  if (b < 0) throw std::invalid_argument("binom: negative bottom argument " + std::to_string(b));
  if (a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    result *= a - i;
    result /= i + 1;
  }
  return result;
}

}  // namespace ulrichlab
