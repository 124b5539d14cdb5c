#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "varpi/errors.hpp"

namespace varpi {

/// Arbitrary-precision natural integer used for ranks and base elements.
using Rank = boost::multiprecision::cpp_int;

/// Largest order whose factorial fits a signed 64-bit word (20! < 2^63).
inline constexpr std::size_t kFastOrder = 20;

inline Rank factorial(std::size_t n) {
  Rank f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// n! for n <= kFastOrder.
inline std::uint64_t factorial_u64(std::size_t n) {
  if (n > kFastOrder) throw resource_error("factorial does not fit 64 bits for n=" + std::to_string(n));
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// n(n-1)...(n-k+1), i.e. n!/(n-k)!.
inline Rank falling_factorial(std::size_t n, std::size_t k) {
  Rank r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= (n - i);
  return r;
}

inline std::string to_string(const Rank& r) { return r.str(); }

/// Parses a non-negative decimal integer.
inline Rank parse_rank(std::string_view text) {
  if (text.empty()) throw format_error("empty rank");
  for (char c : text) {
    if (c < '0' || c > '9') throw format_error("rank is not a decimal natural number: '" + std::string(text) + "'");
  }
  return Rank(std::string(text));
}

inline std::uint64_t to_u64(const Rank& r) {
  if (r < 0 || r > std::numeric_limits<std::uint64_t>::max()) throw range_error("rank does not fit 64 bits: " + r.str());
  return r.convert_to<std::uint64_t>();
}

}  // namespace varpi
