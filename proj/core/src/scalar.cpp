#include "hly/scalar.hpp"

#include "hly/errors.hpp"

#include <cctype>

namespace hly {

namespace {

// Digits-only check; empty counts as invalid.
bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d.is_zero())
    throw ParseError("zero denominator in scalar '" + std::string(text) + "'");
  if (negative) n = -n;
  return Scalar(n, d);
}

std::string format_scalar(const Scalar& s) {
  std::string out = numerator(s).str();
  if (denominator(s) != 1) {
    out += '/';
    out += denominator(s).str();
  }
  return out;
}

}  // namespace hly
