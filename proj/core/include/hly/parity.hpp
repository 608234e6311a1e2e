#pragma once

#include "hly/scalar.hpp"

#include <initializer_list>
#include <utility>

namespace hly {

/// Z/2 degree of a homogeneous element or map.
enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr int bit(Parity p) { return static_cast<int>(p); }

/// Degree of a composite: parities add mod 2.
constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(bit(a) ^ bit(b));
}

/// Exponent contributed by moving an element of parity `a` past one of
/// parity `b` (the product of the two degrees, 0 or 1).
constexpr int parity_product(Parity a, Parity b) { return bit(a) & bit(b); }

/// Sign (-1)^(sum of degree products) accumulated by a sequence of swaps.
/// Each pair (a, b) records one transposition of homogeneous factors.
inline Scalar koszul_sign(
    std::initializer_list<std::pair<Parity, Parity>> swaps) {
  int e = 0;
  for (const auto& [a, b] : swaps) e ^= parity_product(a, b);
  return Scalar(parity_sign(e));
}

}  // namespace hly
