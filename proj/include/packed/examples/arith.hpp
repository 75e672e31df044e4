#pragma once

#include <cstdint>
#include <limits>

#include "packed/adt.hpp"
#include "packed/error.hpp"

namespace packed::examples {

// 64-bit arithmetic that wraps on overflow instead of invoking UB.

constexpr Int wrapping_add(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

constexpr Int wrapping_sub(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

constexpr Int wrapping_mul(Int a, Int b) noexcept {
  return static_cast<Int>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

// Truncates toward zero; INT64_MIN / -1 wraps to INT64_MIN.
constexpr Int checked_div(Int a, Int b) {
  if (b == 0) throw error(errc::division_by_zero, "division by zero");
  if (a == std::numeric_limits<Int>::min() && b == -1) return a;
  return a / b;
}

}  // namespace packed::examples
