#include <doctest.h>

#include "oracles.hpp"
#include "postwitt/rota_baxter.hpp"

using namespace postwitt;

namespace {

PolyScalar pb() { return PolyScalar::param(Param::b); }

WittElement apply_named(const std::string& name, std::int64_t m,
                        std::optional<std::int64_t> nu = std::nullopt) {
  return rb_apply(rb_catalog_lookup(name, nu).op, WittElement::basis(m));
}

}  // namespace

TEST_CASE("operator application on basis elements") {
  CHECK(apply_named("R5", 3) == -WittElement::basis(3));
  CHECK(apply_named("R5", 1).is_zero());
  CHECK(apply_named("NR4", 2) ==
        -WittElement::basis(2) - pb() * WittElement::basis(1));
  CHECK(apply_named("R2", -7) == -WittElement::basis(-7));
  // Linearity over a two-term element.
  const RBCatalogEntry r5 = rb_catalog_lookup("R5");
  const WittElement x = WittElement::basis(2) +
                        PolyScalar(3) * WittElement::basis(1);
  CHECK(rb_apply(r5.op, x) == -WittElement::basis(2));
}

TEST_CASE("catalog lookups and admissibility") {
  const RBCatalogEntry r2 = rb_catalog_lookup("R2");
  CHECK(r2.op.f.eval(5) == PolyScalar(-1));
  CHECK(r2.op.f.eval(-5) == PolyScalar(-1));
  CHECK(r2.op.nu == 0);
  CHECK(r2.op.g.is_zero_everywhere());

  const RBCatalogEntry nr1 = rb_catalog_lookup("NR1", 2);
  CHECK(nr1.op.f.eval(0) == PolyScalar(-1));
  CHECK(nr1.op.f.eval(-1) == PolyScalar(0));
  CHECK(apply_named("NR1", -2, 2) == -pb() * WittElement::basis(0));

  CHECK_THROWS_AS((void)rb_catalog_lookup("NR3", 1), Error);
  try {
    (void)rb_catalog_lookup("NR3", 1);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::inadmissible_nu);
  }
  CHECK_THROWS_AS((void)rb_catalog_lookup("R9"), Error);
  try {
    (void)rb_catalog_lookup("R9");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::unknown_name);
  }
}

TEST_CASE("operator catalog matches the printed case lists") {
  for (const RBCatalogEntry& entry : rb_catalog_all_instances()) {
    const std::int64_t nu = entry.nu.value_or(0);
    for (std::int64_t m = -10; m <= 10; ++m) {
      INFO(entry.name << " nu=" << nu << " at m=" << m);
      CHECK(rb_apply(entry.op, WittElement::basis(m)) ==
            oracle::rb_case_list(entry.name, nu, m));
    }
  }
}

TEST_CASE("weight-one identity") {
  const RBCatalogEntry r5 = rb_catalog_lookup("R5");
  const VerifyReport report = check_weight1(r5.op, Window(-6, 6));
  CHECK(report.passed);
  CHECK(report.total_checked == 13 * 13);

  // Spot check at (L_2, L_3): both sides equal -L_5.
  {
    const WittElement x = WittElement::basis(2);
    const WittElement y = WittElement::basis(3);
    const WittElement lhs = bracket(rb_apply(r5.op, x), rb_apply(r5.op, y));
    CHECK(lhs == -WittElement::basis(5));
    const WittElement rhs =
        rb_apply(r5.op, bracket(rb_apply(r5.op, x), y) +
                            bracket(x, rb_apply(r5.op, y))) +
        rb_apply(r5.op, bracket(x, y));
    CHECK(rhs == -WittElement::basis(5));
  }

  CHECK(check_weight1(rb_catalog_lookup("R1").op, Window(-5, 5)).passed);

  // Turning on the value at 1 lands exactly on the a = 0 member of the
  // half-line operator family with free central value, so it still passes.
  const RBOperator shifted_edge{r5.op.f.with_value_at(1, PolyScalar(-1)),
                                r5.op.g, 0};
  CHECK(check_weight1(shifted_edge, Window(-6, 6)).passed);
  const RBCatalogEntry r3 = rb_catalog_lookup("R3a");
  CHECK(shifted_edge.f == r3.op.f.with_value_at(0, PolyScalar(0)));

  // Knocking out the value at 2 matches no operator in the catalog.
  const RBOperator mutated{r5.op.f.with_value_at(2, PolyScalar(0)), r5.op.g,
                           0};
  const VerifyReport bad = check_weight1(mutated, Window(-6, 6));
  CHECK_FALSE(bad.passed);
  CHECK(bad.failure_count > 0);
}

TEST_CASE("derived products land on the paired catalog entries") {
  auto derived_equals = [](const std::string& rb_name,
                           std::optional<std::int64_t> nu) {
    const RBCatalogEntry entry = rb_catalog_lookup(rb_name, nu);
    const PostLieSpec derived = derive_postlie(entry.op);
    const CatalogEntry paired =
        catalog_lookup(rb_paired_postlie_name(rb_name), nu);
    return spec_equal(derived, paired.spec);
  };
  CHECK(derived_equals("R3a", std::nullopt));
  CHECK(derived_equals("NR4", -1));
  CHECK(derived_equals("R1", std::nullopt));
  CHECK(rb_paired_postlie_name("R5") == "P5");
  CHECK(rb_paired_postlie_name("MR8") == "MP8");

  // Product route: x o y = [R(x), y] agrees with the derived descriptor.
  for (const RBCatalogEntry& entry : rb_catalog_all_instances()) {
    const PostLieSpec derived = derive_postlie(entry.op);
    for (std::int64_t m = -6; m <= 6; ++m) {
      for (std::int64_t n = -6; n <= 6; ++n) {
        INFO(entry.name << " at (" << m << ", " << n << ")");
        CHECK(circ_basis(derived, m, n) ==
              bracket(rb_apply(entry.op, WittElement::basis(m)),
                      WittElement::basis(n)));
      }
    }
  }
}

TEST_CASE("operator construction guards") {
  CHECK_THROWS_AS(
      (void)make_rb_operator(IndexFunction(), IndexFunction::point(1, pb()),
                             0),
      Error);
  CHECK_THROWS_AS(
      (void)make_rb_operator(IndexFunction(), IndexFunction(), 3), Error);
}
