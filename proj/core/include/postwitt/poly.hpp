#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "postwitt/rational.hpp"

namespace postwitt {

/// The fixed set of formal parameters. Everything symbolic in the library is
/// a polynomial over these with exact rational coefficients.
enum class Param : std::uint8_t { a, b, c, alpha, epsilon, mu, t };

inline constexpr std::size_t kParamCount = 7;

std::string_view param_name(Param p);
Param param_from_name(std::string_view name);

/// Exponent vector of a monomial, one slot per declared parameter.
using ExpVec = std::array<std::uint8_t, kParamCount>;

inline int total_degree(const ExpVec& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded-lexicographic order, descending: higher total degree first, ties
/// broken by lexicographically larger exponent vector. Map iteration order
/// equals the canonical rendering order.
struct GrlexDesc {
  bool operator()(const ExpVec& x, const ExpVec& y) const {
    const int dx = total_degree(x), dy = total_degree(y);
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

/// Multivariate polynomial in the declared parameters over exact rationals.
/// Canonical form: no zero coefficients are stored, so equality of term maps
/// decides equality of polynomials and is_zero() is exact.
class PolyScalar {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexDesc>;

  PolyScalar() = default;
  PolyScalar(int value) : PolyScalar(Rational(value)) {}
  PolyScalar(const Rational& value);
  static PolyScalar param(Param p);
  static PolyScalar monomial(const Rational& coeff, const ExpVec& exps);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial, otherwise the maximal total degree.
  int degree() const;
  bool is_constant() const;
  /// Constant term (zero if absent); meaningful mostly with is_constant().
  Rational constant_value() const;
  /// Coefficient of the given exponent vector (zero if absent).
  Rational coeff(const ExpVec& exps) const;

  const TermMap& terms() const { return terms_; }

  PolyScalar& operator+=(const PolyScalar& rhs);
  PolyScalar& operator-=(const PolyScalar& rhs);
  PolyScalar& operator*=(const PolyScalar& rhs);
  friend PolyScalar operator+(PolyScalar lhs, const PolyScalar& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend PolyScalar operator-(PolyScalar lhs, const PolyScalar& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend PolyScalar operator*(const PolyScalar& lhs, const PolyScalar& rhs);
  PolyScalar operator-() const;

  friend bool operator==(const PolyScalar& lhs, const PolyScalar& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const PolyScalar& lhs, const PolyScalar& rhs) {
    return !(lhs == rhs);
  }

  /// Exact substitution. The assignment must cover every parameter that
  /// occurs; otherwise raises missing-parameter naming the absent one.
  Rational evaluate(const std::map<Param, Rational>& assignment) const;

  /// True if the parameter occurs with nonzero exponent in some term.
  bool mentions(Param p) const;

  /// Canonical text form, e.g. "-2*b", "1/2", "a^2 - a", "0".
  std::string render() const;
  /// Parses the same grammar render() emits. Whitespace-tolerant.
  static PolyScalar parse(std::string_view text);

 private:
  void insert_term(const ExpVec& exps, const Rational& coeff);
  TermMap terms_;
};

inline PolyScalar operator*(const Rational& c, const PolyScalar& p) {
  return PolyScalar(c) * p;
}

}  // namespace postwitt
