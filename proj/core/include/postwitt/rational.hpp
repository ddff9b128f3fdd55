#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "postwitt/errors.hpp"

namespace postwitt {

// Arbitrary-precision integers and canonical rationals. cpp_rational keeps
// the invariants we rely on: positive denominator, gcd-reduced, zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return numerator(q); }
inline BigInt rational_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// num/den with signs normalized; boost's raw two-argument constructor
/// rejects a negative denominator instead of canonicalizing it.
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) raise(Errc::parse_error, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational rational_from_string(std::string_view text);

inline std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

inline Rational rational_from_string(std::string_view text) {
  if (text.empty()) raise(Errc::parse_error, "empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part, const char* role,
                       bool allow_sign) -> BigInt {
    if (part.empty()) raise(Errc::parse_error, std::string("missing ") + role);
    std::size_t i = allow_sign && (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size())
      raise(Errc::parse_error, std::string("missing digits in ") + role);
    for (std::size_t k = i; k < part.size(); ++k) {
      if (part[k] < '0' || part[k] > '9')
        raise(Errc::parse_error, "invalid character '" +
                                     std::string(1, part[k]) + "' in " + role +
                                     " at position " + std::to_string(k));
    }
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, "numerator", true));
  }
  BigInt num = parse_int(text.substr(0, slash), "numerator", true);
  BigInt den = parse_int(text.substr(slash + 1), "denominator", false);
  return make_rational(std::move(num), std::move(den));
}

}  // namespace postwitt
