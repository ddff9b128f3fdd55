#include "postwitt/witt.hpp"

namespace postwitt {

void check_index(std::int64_t m) {
  if (m < -kIndexBound || m > kIndexBound)
    raise(Errc::index_out_of_range,
          "basis index " + std::to_string(m) + " exceeds |m| <= 10^6");
}

WittElement WittElement::basis(std::int64_t m) {
  check_index(m);
  WittElement out;
  out.support_.emplace(m, PolyScalar(1));
  return out;
}

WittElement WittElement::term(std::int64_t m, PolyScalar coeff) {
  check_index(m);
  WittElement out;
  if (!coeff.is_zero()) out.support_.emplace(m, std::move(coeff));
  return out;
}

PolyScalar WittElement::coeff(std::int64_t m) const {
  auto it = support_.find(m);
  return it == support_.end() ? PolyScalar() : it->second;
}

void WittElement::add_term(std::int64_t m, const PolyScalar& coeff) {
  if (coeff.is_zero()) return;
  check_index(m);
  auto [it, inserted] = support_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) support_.erase(it);
  }
}

WittElement& WittElement::operator+=(const WittElement& rhs) {
  for (const auto& [m, c] : rhs.support_) add_term(m, c);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& rhs) {
  for (const auto& [m, c] : rhs.support_) add_term(m, -c);
  return *this;
}

WittElement WittElement::operator-() const {
  WittElement out;
  for (const auto& [m, c] : support_) out.support_.emplace(m, -c);
  return out;
}

WittElement operator*(const PolyScalar& c, const WittElement& x) {
  WittElement out;
  for (const auto& [m, coeff] : x.support_) out.add_term(m, c * coeff);
  return out;
}

std::string WittElement::render() const {
  if (support_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : support_) {
    if (!first) out += " + ";
    out += "(" + c.render() + ")*L_" + std::to_string(m);
    first = false;
  }
  return out;
}

WittElement linear_combine(
    std::span<const std::pair<PolyScalar, WittElement>> pairs) {
  WittElement out;
  for (const auto& [c, x] : pairs) out += c * x;
  return out;
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  WittElement out;
  for (const auto& [m, cm] : x.support()) {
    for (const auto& [n, cn] : y.support()) {
      if (m == n) continue;  // (m - n) = 0
      out.add_term(m + n, Rational(m - n) * (cm * cn));
    }
  }
  return out;
}

}  // namespace postwitt
