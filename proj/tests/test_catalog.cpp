#include <doctest.h>

#include "oracles.hpp"
#include "postwitt/examples.hpp"
#include "postwitt/module_action.hpp"

using namespace postwitt;

namespace {

WittElement circ_names(const std::string& name, std::int64_t m, std::int64_t n,
                       std::optional<std::int64_t> nu = std::nullopt) {
  return circ_basis(catalog_lookup(name, nu).spec, m, n);
}

PolyScalar pa() { return PolyScalar::param(Param::a); }
PolyScalar pb() { return PolyScalar::param(Param::b); }

}  // namespace

TEST_CASE("catalog lookups") {
  const CatalogEntry p5 = catalog_lookup("P5");
  const auto& f = std::get<GradedSpec>(p5.spec).f;
  CHECK(f.eval(2) == PolyScalar(-1));
  CHECK(f.eval(7) == PolyScalar(-1));
  CHECK(f.eval(1) == PolyScalar(0));
  CHECK(f.eval(-4) == PolyScalar(0));

  const CatalogEntry np4 = catalog_lookup("NP4", -1);
  const auto& shifting = std::get<ShiftingSpec>(np4.spec);
  CHECK(shifting.nu == -1);
  CHECK(shifting.f.eval(2) == PolyScalar(-1));
  CHECK(shifting.f.eval(1) == PolyScalar(0));
  CHECK(shifting.g.eval(2) == -pb());
  CHECK(shifting.g.eval(3) == PolyScalar(0));
  CHECK(shifting.g.eval(-1) == PolyScalar(0));

  CHECK_THROWS_AS((void)catalog_lookup("NP3", -5), Error);
  try {
    (void)catalog_lookup("NP3", -5);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::inadmissible_nu);
  }
  CHECK_THROWS_AS((void)catalog_lookup("P99"), Error);
  // NP4 has a single admissible shift; it may be omitted.
  CHECK(catalog_lookup("NP4").nu == -1);
  // NP1 has two; it may not.
  CHECK_THROWS_AS((void)catalog_lookup("NP1"), Error);
}

TEST_CASE("products on basis elements") {
  CHECK(circ_names("P2", 1, 2) == WittElement::basis(3));
  CHECK(circ_names("P3a", 0, 4) ==
        Rational(4) * pa() * WittElement::basis(4));
  const WittElement np4 = circ_names("NP4", 2, 3, -1);
  CHECK(np4 == WittElement::basis(5) +
                   Rational(2) * pb() * WittElement::basis(4));
  CHECK(circ_names("P5", 1, 7).is_zero());
}

TEST_CASE("induced bracket on basis elements") {
  auto induced = [&](const std::string& name, std::int64_t m, std::int64_t n) {
    return induced_bracket(catalog_lookup(name).spec, WittElement::basis(m),
                           WittElement::basis(n));
  };
  // Zero product: the induced bracket is the Witt bracket itself.
  CHECK(induced("P1", 1, 3) == Rational(-2) * WittElement::basis(4));
  CHECK(induced("P2", 1, 3) == Rational(2) * WittElement::basis(4));
  CHECK(induced("P3a", 0, 5) == Rational(5) * pa() * WittElement::basis(5));
}

TEST_CASE("catalog fidelity: ansatz equals the printed case lists") {
  for (const auto& name : catalog_graded_names()) {
    const CatalogEntry entry = catalog_lookup(name);
    for (std::int64_t m = -10; m <= 10; ++m) {
      for (std::int64_t n = -10; n <= 10; ++n) {
        INFO(name << " at (" << m << ", " << n << ")");
        CHECK(circ_basis(entry.spec, m, n) ==
              oracle::graded_case_list(name, m, n));
      }
    }
  }
  for (const CatalogEntry& entry : catalog_all_shifting_instances()) {
    for (std::int64_t m = -10; m <= 10; ++m) {
      for (std::int64_t n = -10; n <= 10; ++n) {
        INFO(entry.name << " nu=" << *entry.nu << " at (" << m << ", " << n << ")");
        CHECK(circ_basis(entry.spec, m, n) ==
              oracle::shifting_case_list(entry.name, *entry.nu, m, n));
      }
    }
  }
}

TEST_CASE("induced brackets are antisymmetric") {
  std::vector<PostLieSpec> specs;
  for (const auto& name : catalog_graded_names())
    specs.push_back(catalog_lookup(name).spec);
  for (const CatalogEntry& entry : catalog_all_shifting_instances())
    specs.push_back(entry.spec);
  for (const PostLieSpec& spec : specs) {
    for (std::int64_t m = -6; m <= 6; ++m) {
      for (std::int64_t n = -6; n <= 6; ++n) {
        const WittElement x = WittElement::basis(m);
        const WittElement y = WittElement::basis(n);
        CHECK((induced_bracket(spec, x, y) + induced_bracket(spec, y, x))
                  .is_zero());
      }
    }
  }
}

TEST_CASE("negating the basis intertwines the mirror-pair brackets") {
  // sigma(L_m) = -L_m is a Lie isomorphism between the brackets induced
  // by the all-zero/all-minus-one pair and by the two half-line pairs.
  auto sigma = [](const WittElement& x) { return -x; };
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"P1", "P2"}, {"P5", "P6"}, {"P7", "P8"}};
  for (const auto& [one, two] : pairs) {
    const CatalogEntry a = catalog_lookup(one);
    const CatalogEntry b = catalog_lookup(two);
    for (std::int64_t m = -6; m <= 6; ++m) {
      for (std::int64_t n = -6; n <= 6; ++n) {
        const WittElement x = WittElement::basis(m);
        const WittElement y = WittElement::basis(n);
        CHECK(induced_bracket(b.spec, x, y) ==
              sigma(induced_bracket(a.spec, sigma(x), sigma(y))));
      }
    }
  }
}

TEST_CASE("tau transport maps between catalog entries") {
  auto spec_of = [](const std::string& name,
                    std::optional<std::int64_t> nu = std::nullopt) {
    return catalog_lookup(name, nu).spec;
  };
  CHECK(spec_equal(transport_tau(spec_of("P3a")), spec_of("P4a")));
  CHECK(spec_equal(transport_tau(spec_of("P5")), spec_of("P7")));
  CHECK(spec_equal(transport_tau(spec_of("P6")), spec_of("P8")));
  CHECK(spec_equal(transport_tau(spec_of("P1")), spec_of("P1")));
  CHECK(spec_equal(transport_tau(spec_of("NP1", 1)), spec_of("MP1", -1)));
  CHECK(spec_equal(transport_tau(spec_of("NP5", -2)), spec_of("MP5", 2)));
  CHECK(spec_equal(transport_tau(spec_of("NP6", -3)), spec_of("MP6", 3)));

  // Involution.
  for (const auto& name : catalog_graded_names()) {
    const PostLieSpec spec = spec_of(name);
    CHECK(spec_equal(transport_tau(transport_tau(spec)), spec));
  }
  for (const CatalogEntry& entry : catalog_all_shifting_instances()) {
    CHECK(spec_equal(transport_tau(transport_tau(entry.spec)), entry.spec));
  }

  CHECK_THROWS_AS(
      (void)transport_tau(constant_shift_table(PolyScalar(0), PolyScalar(1), 1,
                                               Window(-2, 2))),
      Error);
}

TEST_CASE("tau transport is the homomorphism it claims to be") {
  auto tau = [](const WittElement& x) {
    WittElement out;
    for (const auto& [m, c] : x.support()) out.add_term(-m, -c);
    return out;
  };
  std::vector<PostLieSpec> specs;
  for (const auto& name : catalog_graded_names())
    specs.push_back(catalog_lookup(name).spec);
  for (const CatalogEntry& entry : catalog_all_shifting_instances())
    specs.push_back(entry.spec);
  for (const PostLieSpec& spec : specs) {
    const PostLieSpec transported = transport_tau(spec);
    for (std::int64_t m = -8; m <= 8; ++m) {
      for (std::int64_t n = -8; n <= 8; ++n) {
        const WittElement lhs = tau(circ_basis(spec, m, n));
        const WittElement rhs =
            circ(transported, tau(WittElement::basis(m)),
                 tau(WittElement::basis(n)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("scaling transport on graded entries") {
  auto spec_of = [](const std::string& name) {
    return catalog_lookup(name).spec;
  };
  CHECK(spec_equal(transport_scaling(spec_of("P1"), -1, Rational(2)),
                   spec_of("P1")));
  CHECK(spec_equal(transport_scaling(spec_of("P3a"), 1, Rational(3)),
                   spec_of("P3a")));
  CHECK(spec_equal(transport_scaling(spec_of("P5"), -1, Rational(1)),
                   spec_of("P7")));
  CHECK_THROWS_AS(
      (void)transport_scaling(spec_of("P5"), 2, Rational(1)), Error);
  CHECK_THROWS_AS(
      (void)transport_scaling(spec_of("P5"), 1, Rational(0)), Error);
  CHECK_THROWS_AS((void)transport_scaling(
                      catalog_lookup("NP4", -1).spec, 1, Rational(2)),
                  Error);
}

TEST_CASE("rational graded table: point values and denominators") {
  // Direct exact evaluation of the closed form.
  CHECK(rational_graded_phi(Rational(1), Rational(1, 3), 1, 1) ==
        Rational(-28, 15));
  // eps = 0 collapses to -(alpha + n).
  CHECK(rational_graded_phi(Rational(2), Rational(0), 5, 3) == Rational(-5));
  const PostLieSpec table =
      rational_graded_table(Rational(2), Rational(0), Window(-3, 3));
  for (std::int64_t m = -3; m <= 3; ++m)
    for (std::int64_t n = -3; n <= 3; ++n)
      CHECK(circ_basis(table, m, n) ==
            PolyScalar(Rational(-(2 + n))) * WittElement::basis(m + n));

  // 1 + (1/2)(-2) = 0 inside the window.
  CHECK_THROWS_AS(
      (void)rational_graded_table(Rational(1), Rational(1, 2), Window(-2, 2)),
      Error);
  try {
    (void)rational_graded_table(Rational(1), Rational(1, 2), Window(-2, 2));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::denominator_zero);
  }
  // Denominators clear the window but 1/eps is an integer.
  CHECK_THROWS_AS(
      (void)rational_graded_table(Rational(1), Rational(1, 2), Window(0, 3)),
      Error);
  try {
    (void)rational_graded_table(Rational(1), Rational(1, 2), Window(0, 3));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::parameter_constraint);
  }
  // Window escape on the declared rectangle.
  CHECK_THROWS_AS((void)circ_basis(table, 4, 0), Error);
}

TEST_CASE("constant shift table") {
  // alpha = 0, mu = 0, nu = 1: L_1 o L_2 = -2 L_3.
  const PostLieSpec simple =
      constant_shift_table(PolyScalar(0), PolyScalar(0), 1, Window(-4, 4));
  CHECK(circ_basis(simple, 1, 2) == Rational(-2) * WittElement::basis(3));
  // alpha = 1, mu = 2, nu = 1: L_0 o L_0 = -L_0 + 2 L_1.
  const PostLieSpec two =
      constant_shift_table(PolyScalar(1), PolyScalar(2), 1, Window(-4, 4));
  CHECK(circ_basis(two, 0, 0) ==
        -WittElement::basis(0) + Rational(2) * WittElement::basis(1));
  CHECK_THROWS_AS(
      (void)constant_shift_table(PolyScalar(1), PolyScalar(1), 0,
                                 Window(-4, 4)),
      Error);
}

TEST_CASE("module actions: printed cases") {
  CHECK(module_action("LP1").act_basis(5, 2).is_zero());
  CHECK(module_action("LP5").act_basis(2, 0) ==
        Rational(-2) * WittElement::basis(2));
  CHECK(module_action("LP3a").act_basis(0, 4) ==
        Rational(4) * pa() * WittElement::basis(4));
  CHECK_THROWS_AS((void)module_action("LP9"), Error);
  CHECK_THROWS_AS((void)module_action("LNP1"), Error);       // needs nu
  CHECK_THROWS_AS((void)module_action("LNP1", 5), Error);    // bad nu
  CHECK_THROWS_AS((void)module_action("NP4-action", 2), Error);
  CHECK(module_action("NP4-action").nu() == -1);
}

TEST_CASE("module actions agree with the product read on the v-basis") {
  struct Case {
    std::string name;
    std::optional<std::int64_t> nu;
  };
  std::vector<Case> cases = {{"LP1", std::nullopt},  {"LP3a", std::nullopt},
                             {"LP5", std::nullopt},  {"LNP1", 1},
                             {"LNP1", 2},            {"LNP3", -2},
                             {"LNP3", -3},           {"LNP3", -4},
                             {"NP4-action", std::nullopt},
                             {"NP5-action", std::nullopt}};
  for (const auto& c : cases) {
    const ModuleAction action = module_action(c.name, c.nu);
    for (std::int64_t m = -6; m <= 6; ++m) {
      for (std::int64_t n = -6; n <= 6; ++n) {
        INFO(c.name << " at (" << m << ", " << n << ")");
        CHECK(action.act_basis(m, n) ==
              circ_basis(action.underlying_spec(), m, n));
      }
    }
  }
}
