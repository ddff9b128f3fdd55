#include "postwitt/poly.hpp"

#include <algorithm>
#include <cctype>

namespace postwitt {

namespace {
constexpr std::array<std::string_view, kParamCount> kParamNames = {
    "a", "b", "c", "alpha", "epsilon", "mu", "t"};
}

std::string_view param_name(Param p) {
  return kParamNames[static_cast<std::size_t>(p)];
}

Param param_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (kParamNames[i] == name) return static_cast<Param>(i);
  }
  raise(Errc::unknown_name, "unknown parameter '" + std::string(name) + "'");
}

PolyScalar::PolyScalar(const Rational& value) {
  if (value != 0) terms_.emplace(ExpVec{}, value);
}

PolyScalar PolyScalar::param(Param p) {
  ExpVec e{};
  e[static_cast<std::size_t>(p)] = 1;
  PolyScalar out;
  out.terms_.emplace(e, Rational(1));
  return out;
}

PolyScalar PolyScalar::monomial(const Rational& coeff, const ExpVec& exps) {
  PolyScalar out;
  if (coeff != 0) out.terms_.emplace(exps, coeff);
  return out;
}

int PolyScalar::degree() const {
  if (terms_.empty()) return -1;
  // Grlex-descending order: the first term has maximal total degree.
  return total_degree(terms_.begin()->first);
}

bool PolyScalar::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
}

Rational PolyScalar::constant_value() const { return coeff(ExpVec{}); }

Rational PolyScalar::coeff(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyScalar::insert_term(const ExpVec& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
  return *this;
}

PolyScalar operator*(const PolyScalar& lhs, const PolyScalar& rhs) {
  PolyScalar out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      ExpVec e{};
      for (std::size_t i = 0; i < kParamCount; ++i) {
        const int sum = ea[i] + eb[i];
        if (sum > 255)
          raise(Errc::invalid_argument, "monomial exponent overflow");
        e[i] = static_cast<std::uint8_t>(sum);
      }
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

PolyScalar PolyScalar::operator-() const {
  PolyScalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Rational PolyScalar::evaluate(
    const std::map<Param, Rational>& assignment) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (e[i] == 0) continue;
      auto it = assignment.find(static_cast<Param>(i));
      if (it == assignment.end())
        raise(Errc::missing_parameter,
              "no value for parameter '" +
                  std::string(param_name(static_cast<Param>(i))) + "'");
      for (int k = 0; k < e[i]; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

bool PolyScalar::mentions(Param p) const {
  const auto idx = static_cast<std::size_t>(p);
  return std::any_of(terms_.begin(), terms_.end(),
                     [idx](const auto& kv) { return kv.first[idx] != 0; });
}

std::string PolyScalar::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += param_name(static_cast<Param>(i));
      if (e[i] > 1) factors += "^" + std::to_string(int(e[i]));
    }
    if (factors.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += rational_to_string(mag) + "*" + factors;
    }
  }
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  [[noreturn]] void fail(const std::string& what) const {
    raise(Errc::parse_error,
          what + " at column " + std::to_string(pos + 1));
  }
};

Rational parse_rational(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() &&
         (std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])) ||
          cur.text[cur.pos] == '/'))
    ++cur.pos;
  if (cur.pos == start) cur.fail("expected number");
  return rational_from_string(cur.text.substr(start, cur.pos - start));
}

std::pair<Param, int> parse_factor(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  while (cur.pos < cur.text.size() &&
         (std::isalpha(static_cast<unsigned char>(cur.text[cur.pos])) ||
          cur.text[cur.pos] == '_'))
    ++cur.pos;
  if (cur.pos == start) cur.fail("expected parameter name");
  const auto name = cur.text.substr(start, cur.pos - start);
  Param p{};
  try {
    p = param_from_name(name);
  } catch (const Error&) {
    cur.pos = start;
    cur.fail("unknown parameter '" + std::string(name) + "'");
  }
  int exp = 1;
  if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
    ++cur.pos;
    const std::size_t estart = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
      ++cur.pos;
    if (cur.pos == estart) cur.fail("expected exponent");
    if (cur.pos - estart > 3) cur.fail("exponent out of range");
    exp = std::stoi(std::string(cur.text.substr(estart, cur.pos - estart)));
    if (exp <= 0 || exp > 255) cur.fail("exponent out of range");
  }
  return {p, exp};
}

}  // namespace

PolyScalar PolyScalar::parse(std::string_view text) {
  Cursor cur{text};
  if (cur.eof()) cur.fail("empty polynomial");
  PolyScalar result;
  bool first = true;
  while (!cur.eof()) {
    bool negative = false;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    cur.skip_ws();
    if (cur.pos >= cur.text.size()) cur.fail("dangling sign");

    Rational coeff = 1;
    ExpVec exps{};
    c = cur.text[cur.pos];
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = parse_rational(cur);
      saw_number = true;
    }
    bool expect_factor = !saw_number;
    if (saw_number && cur.pos < cur.text.size()) {
      cur.skip_ws();
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
        ++cur.pos;
        expect_factor = true;
      }
    }
    while (expect_factor) {
      auto [p, e] = parse_factor(cur);
      const auto idx = static_cast<std::size_t>(p);
      if (exps[idx] + e > 255) cur.fail("exponent out of range");
      exps[idx] = static_cast<std::uint8_t>(exps[idx] + e);
      cur.skip_ws();
      expect_factor = false;
      if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') {
        ++cur.pos;
        expect_factor = true;
      }
    }
    result.insert_term(exps, negative ? Rational(-coeff) : coeff);
    first = false;
  }
  return result;
}

}  // namespace postwitt
