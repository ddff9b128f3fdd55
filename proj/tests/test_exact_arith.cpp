#include <doctest.h>

#include <random>

#include "postwitt/poly.hpp"

using namespace postwitt;

namespace {

PolyScalar pa() { return PolyScalar::param(Param::a); }
PolyScalar pb() { return PolyScalar::param(Param::b); }

PolyScalar random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> term_count(0, 4);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> exp(0, 2);
  PolyScalar p;
  const int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    ExpVec e{};
    e[static_cast<std::size_t>(Param::a)] = exp(rng);
    e[static_cast<std::size_t>(Param::b)] = exp(rng);
    e[static_cast<std::size_t>(Param::mu)] = exp(rng) == 2 ? 1 : 0;
    p += PolyScalar::monomial(Rational(coeff(rng), den(rng)), e);
  }
  return p;
}

std::map<Param, Rational> random_assignment(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::map<Param, Rational> out;
  for (std::size_t i = 0; i < kParamCount; ++i)
    out[static_cast<Param>(i)] = Rational(coeff(rng), den(rng));
  return out;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  const Rational q = make_rational(-6, -8);
  CHECK(rational_num(q) == 3);
  CHECK(rational_den(q) == 4);
  const Rational zero = make_rational(0, 7);
  CHECK(rational_num(zero) == 0);
  CHECK(rational_den(zero) == 1);
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_from_string("3/2") == Rational(3, 2));
  CHECK(rational_from_string("-1") == Rational(-1));
  CHECK_THROWS_AS((void)rational_from_string("1/0"), Error);
  CHECK_THROWS_AS((void)rational_from_string("1/-2"), Error);
  CHECK_THROWS_AS((void)rational_from_string("x"), Error);
}

TEST_CASE("scalar addition examples") {
  CHECK((pa() + (-pa())).is_zero());
  CHECK(Rational(2) * pb() + Rational(3) * pb() == Rational(5) * pb());
  CHECK(PolyScalar(Rational(1, 2)) + PolyScalar(Rational(1, 3)) ==
        PolyScalar(Rational(5, 6)));
}

TEST_CASE("scalar multiplication examples") {
  CHECK(pa() * pa() == PolyScalar::monomial(1, [] {
          ExpVec e{};
          e[0] = 2;
          return e;
        }()));
  CHECK((PolyScalar(0) * pb()).is_zero());
  CHECK(PolyScalar(-1) * (Rational(2) * pb()) == Rational(-2) * pb());
}

TEST_CASE("evaluate examples") {
  CHECK((Rational(2) * pb()).evaluate({{Param::b, Rational(3, 2)}}) == 3);
  CHECK((pa() * pa()).evaluate({{Param::a, Rational(-1)}}) == 1);
  CHECK_THROWS_AS(
      (void)(Rational(5) * pa()).evaluate({{Param::b, Rational(1)}}), Error);
  try {
    (void)(Rational(5) * pa()).evaluate({{Param::b, Rational(1)}});
  } catch (const Error& err) {
    CHECK(err.code() == Errc::missing_parameter);
    CHECK(std::string(err.what()).find("'a'") != std::string::npos);
  }
}

TEST_CASE("is_zero examples") {
  CHECK((pa() - pa()).is_zero());
  CHECK((pb() * pb() - pb() * pb()).is_zero());
  CHECK_FALSE((pa() + PolyScalar(1)).is_zero());
}

TEST_CASE("degree bounds") {
  CHECK(PolyScalar().degree() == -1);
  CHECK(PolyScalar(3).degree() == 0);
  CHECK((pa() * pa() * pb()).degree() == 3);
  const PolyScalar x = pa() * pa() + pb();
  const PolyScalar y = -(pa() * pa()) + PolyScalar(1);
  CHECK((x + y).degree() <= std::max(x.degree(), y.degree()));
  CHECK((x * pb()).degree() == x.degree() + 1);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 300; ++i) {
    const PolyScalar x = random_poly(rng);
    const PolyScalar y = random_poly(rng);
    const PolyScalar z = random_poly(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("canonicalization is idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const PolyScalar x = random_poly(rng);
    PolyScalar rebuilt;
    for (const auto& [e, c] : x.terms()) rebuilt += PolyScalar::monomial(c, e);
    CHECK(rebuilt == x);
  }
}

TEST_CASE("evaluate is a ring homomorphism") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const PolyScalar x = random_poly(rng);
    const PolyScalar y = random_poly(rng);
    const auto assignment = random_assignment(rng);
    CHECK((x * y).evaluate(assignment) ==
          x.evaluate(assignment) * y.evaluate(assignment));
    CHECK((x + y).evaluate(assignment) ==
          x.evaluate(assignment) + y.evaluate(assignment));
  }
}

TEST_CASE("canonical text form") {
  CHECK((Rational(-2) * pb()).render() == "-2*b");
  CHECK(PolyScalar(Rational(1, 2)).render() == "1/2");
  CHECK((pa() * pa() - pa()).render() == "a^2 - a");
  CHECK(PolyScalar().render() == "0");
  CHECK((pa() + PolyScalar(1)).render() == "a + 1");
  CHECK((pa() * pb()).render() == "a*b");
  CHECK((-pa()).render() == "-a");
  CHECK((Rational(1, 3) * pa() * pb() * pb() - PolyScalar(Rational(7, 2)))
            .render() == "1/3*a*b^2 - 7/2");
}

TEST_CASE("parse round-trips the canonical grammar") {
  CHECK(PolyScalar::parse("-2*b") == Rational(-2) * pb());
  CHECK(PolyScalar::parse("a^2 - a") == pa() * pa() - pa());
  CHECK(PolyScalar::parse("0").is_zero());
  CHECK(PolyScalar::parse("1/2") == PolyScalar(Rational(1, 2)));
  CHECK_THROWS_AS((void)PolyScalar::parse("2*q"), Error);
  CHECK_THROWS_AS((void)PolyScalar::parse(""), Error);
  CHECK_THROWS_AS((void)PolyScalar::parse("a +"), Error);
  CHECK_THROWS_AS((void)PolyScalar::parse("a^999999999999"), Error);
  CHECK_THROWS_AS((void)PolyScalar::parse("a^0"), Error);

  std::mt19937 rng(1234);
  for (int i = 0; i < 200; ++i) {
    const PolyScalar x = random_poly(rng);
    CHECK(PolyScalar::parse(x.render()) == x);
  }
}
