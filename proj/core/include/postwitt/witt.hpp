#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "postwitt/poly.hpp"

namespace postwitt {

/// Hard bound on basis indices. Sums of in-range indices stay far from
/// int64 overflow, so any escape is reported instead of wrapping.
inline constexpr std::int64_t kIndexBound = 1'000'000;

void check_index(std::int64_t m);

/// Finite linear combination of basis symbols L_m with PolyScalar
/// coefficients. Sparse map, no zero coefficients stored.
class WittElement {
 public:
  using Support = std::map<std::int64_t, PolyScalar>;

  WittElement() = default;

  static WittElement basis(std::int64_t m);
  static WittElement zero() { return WittElement(); }
  static WittElement term(std::int64_t m, PolyScalar coeff);

  bool is_zero() const { return support_.empty(); }
  const Support& support() const { return support_; }
  PolyScalar coeff(std::int64_t m) const;

  void add_term(std::int64_t m, const PolyScalar& coeff);

  WittElement& operator+=(const WittElement& rhs);
  WittElement& operator-=(const WittElement& rhs);
  friend WittElement operator+(WittElement lhs, const WittElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend WittElement operator-(WittElement lhs, const WittElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  WittElement operator-() const;
  friend WittElement operator*(const PolyScalar& c, const WittElement& x);

  friend bool operator==(const WittElement& lhs, const WittElement& rhs) {
    return lhs.support_ == rhs.support_;
  }
  friend bool operator!=(const WittElement& lhs, const WittElement& rhs) {
    return !(lhs == rhs);
  }

  std::string render() const;

 private:
  Support support_;
};

/// Coefficientwise sum of scaled elements; zero coefficients pruned.
WittElement linear_combine(
    std::span<const std::pair<PolyScalar, WittElement>> pairs);

/// Bilinear extension of [L_m, L_n] = (m - n) L_{m+n}.
WittElement bracket(const WittElement& x, const WittElement& y);

}  // namespace postwitt
