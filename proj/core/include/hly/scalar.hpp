#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hly {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; all arithmetic in the library is exact (no floating point).
using Scalar = boost::multiprecision::cpp_rational;

inline bool is_zero(const Scalar& s) { return s.sign() == 0; }

/// (-1)^exponent as a plain int (+1 or -1).
inline int parity_sign(int exponent) { return (exponent & 1) ? -1 : 1; }

/// Parses a fraction string: an optional sign, digits, optionally "/digits".
/// Rejects empty strings, embedded whitespace, and zero denominators.
Scalar parse_scalar(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q"
/// with q > 0. parse_scalar(format_scalar(s)) == s for every s.
std::string format_scalar(const Scalar& s);

}  // namespace hly
