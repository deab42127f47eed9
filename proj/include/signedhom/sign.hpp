#pragma once

#include <cstdint>

namespace signedhom {

// Edge sign; multiplies like {+1, -1}.
enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign flipped(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr bool is_negative(Sign s) { return s == Sign::Negative; }

constexpr char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

}  // namespace signedhom
