#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "postwitt/classify.hpp"
#include "postwitt/linsolve.hpp"
#include "postwitt/serialize.hpp"
#include "postwitt/verify.hpp"

using namespace postwitt;

namespace {

std::set<std::string> matched_names(const ClassificationReport& report) {
  std::set<std::string> out;
  for (const auto& s : report.solutions) out.insert(s.matched);
  return out;
}

const ShiftingRay& ray_of(const ClassifiedSolution& s) {
  return std::get<ShiftingRay>(s.data);
}

}  // namespace

TEST_CASE("graded classification on the 2-window") {
  const ClassificationReport report = classify_graded(Window(-2, 2));
  // Every family restriction is consistent here and nothing else is.
  CHECK(report.solutions.size() == 8);
  CHECK(matched_names(report) ==
        std::set<std::string>{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"});

  for (const auto& s : report.solutions) {
    const auto& sol = std::get<GradedSolution>(s.data);
    if (s.matched == "P3" || s.matched == "P4") {
      CHECK(sol.f0.kind == F0Constraint::Kind::free);
    } else if (s.matched == "P1" || s.matched == "P5" || s.matched == "P7") {
      CHECK(sol.f0.kind == F0Constraint::Kind::equals);
      CHECK(sol.f0.value == 0);
    } else {
      CHECK(sol.f0.kind == F0Constraint::Kind::equals);
      CHECK(sol.f0.value == -1);
    }
  }
}

TEST_CASE("graded classification equals the brute-force sweep") {
  for (const Window& w : {Window(-2, 2), Window(-3, 3)}) {
    const ClassificationReport fast = classify_graded(w);
    const std::vector<GradedSolution> slow = oracle::brute_force_graded(w);
    REQUIRE(fast.solutions.size() == slow.size());
    // Both are produced in assignment order, but compare as sets.
    auto key = [](const GradedSolution& g) {
      std::string k;
      for (const auto& [m, v] : g.f_values)
        k += std::to_string(m) + ":" + std::to_string(v) + ";";
      k += g.f0.kind == F0Constraint::Kind::free
               ? "free"
               : rational_to_string(g.f0.value);
      return k;
    };
    std::set<std::string> fast_keys, slow_keys;
    for (const auto& s : fast.solutions)
      fast_keys.insert(key(std::get<GradedSolution>(s.data)));
    for (const auto& s : slow) slow_keys.insert(key(s));
    CHECK(fast_keys == slow_keys);
  }
}

TEST_CASE("family restrictions stay distinct on one-sided windows") {
  // On {0..3} the two all-zero-looking families still differ.
  const auto p5 = family_restriction(GradedFamily::P5, Window(0, 3));
  const auto p1 = family_restriction(GradedFamily::P1, Window(0, 3));
  CHECK(p5 != p1);
  // Pairwise distinctness on any window reaching +-3.
  const Window w(-3, 3);
  for (auto x : kAllFamilies) {
    for (auto y : kAllFamilies) {
      if (x == y) continue;
      CHECK(family_restriction(x, w) != family_restriction(y, w));
    }
  }
}

TEST_CASE("budget and window guards") {
  CHECK_THROWS_AS((void)classify_graded(Window(-3, 3), 16), Error);
  try {
    (void)classify_graded(Window(-3, 3), 16);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::window_too_large);
  }
  CHECK_THROWS_AS((void)classify_graded(Window(1, 4)), Error);
}

TEST_CASE("tiny windows report ambiguity instead of guessing") {
  const ClassificationReport report = classify_graded(Window(-1, 1));
  bool saw_ambiguous = false;
  for (const auto& s : report.solutions) {
    if (s.matched.find("ambiguous-match") != std::string::npos)
      saw_ambiguous = true;
  }
  CHECK(saw_ambiguous);
}

TEST_CASE("shifting classification singles out the catalog rays") {
  {
    // Family with free f(0), shift +1: one ray, tail at -1, f(0) = -1.
    const ClassificationReport report =
        classify_shifting(GradedFamily::P3, 1, Window(-8, 8));
    REQUIRE(report.solutions.size() == 1);
    CHECK(report.solutions[0].matched == "NP1");
    const ShiftingRay& ray = ray_of(report.solutions[0]);
    CHECK(ray.f0 == Rational(-1));
    CHECK(ray.gamma == std::map<std::int64_t, Rational>{{-1, Rational(1)}});
    CHECK(ray.nullspace_dim == 1);
  }
  {
    // Same family, negative shift: the other pinned value of f(0).
    const ClassificationReport report =
        classify_shifting(GradedFamily::P3, -1, Window(-8, 8));
    REQUIRE(report.solutions.size() == 1);
    CHECK(report.solutions[0].matched == "NP2");
    CHECK(ray_of(report.solutions[0]).f0 == Rational(0));
  }
  {
    // Two rays: single tail at 2 and the 2:1 pair on {2, 3}.
    const ClassificationReport report =
        classify_shifting(GradedFamily::P5, -2, Window(-8, 8));
    REQUIRE(report.solutions.size() == 2);
    CHECK(matched_names(report) == std::set<std::string>{"NP3", "NP5"});
    for (const auto& s : report.solutions) {
      const ShiftingRay& ray = ray_of(s);
      CHECK(ray.nullspace_dim == 2);
      if (s.matched == "NP5") {
        CHECK(ray.gamma ==
              std::map<std::int64_t, Rational>{{2, Rational(1)},
                                               {3, Rational(2)}});
      }
    }
    CHECK(report.needs_review);
  }
  {
    // The zero-f family admits no tail at all.
    const ClassificationReport report =
        classify_shifting(GradedFamily::P1, 1, Window(-8, 8));
    CHECK(report.solutions.empty());
  }
  CHECK_THROWS_AS(
      (void)classify_shifting(GradedFamily::P5, 0, Window(-8, 8)), Error);
}

TEST_CASE("emitted rays pass the functional equations symbolically") {
  for (auto family : {GradedFamily::P5, GradedFamily::P7}) {
    for (std::int64_t nu : {-2, -1, 1, 2}) {
      const ClassificationReport report =
          classify_shifting(family, nu, Window(-8, 8));
      for (const auto& s : report.solutions) {
        const ShiftingRay& ray = ray_of(s);
        // Reconstruct g = b * gamma as an index function.
        std::vector<Piece> pieces;
        for (const auto& [m, v] : ray.gamma)
          pieces.push_back(
              {GuardKind::eq, m, v * PolyScalar::param(Param::b)});
        pieces.push_back({GuardKind::otherwise, 0, PolyScalar(0)});
        const IndexFunction g{std::move(pieces)};
        const IndexFunction f = ray.f0 ? family_f_at(family, *ray.f0)
                                       : family_f(family);
        CHECK(check_shifting_feqs(f, g, nu, Window(-8, 8)).passed);
      }
    }
  }
}

TEST_CASE("ray scale invariance") {
  // If gamma solves the quadratic filter, so does every rational multiple;
  // the emitted normalization is itself a witness. Check by rescaling.
  const ClassificationReport report =
      classify_shifting(GradedFamily::P5, -2, Window(-8, 8));
  for (const auto& s : report.solutions) {
    const ShiftingRay& ray = ray_of(s);
    for (const Rational& t : {Rational(3), Rational(-1, 2), Rational(7, 5)}) {
      std::vector<Piece> pieces;
      for (const auto& [m, v] : ray.gamma)
        pieces.push_back({GuardKind::eq, m,
                          PolyScalar(t * v) * PolyScalar::param(Param::b)});
      pieces.push_back({GuardKind::otherwise, 0, PolyScalar(0)});
      const IndexFunction g{std::move(pieces)};
      const IndexFunction f = family_f(GradedFamily::P5);
      CHECK(check_shifting_feqs(f, g, -2, Window(-8, 8)).passed);
    }
  }
}

TEST_CASE("ray matching is up to scale and support") {
  ShiftingRay ray;
  ray.family = GradedFamily::P5;
  ray.f0 = std::nullopt;
  ray.nu = -1;
  ray.gamma = {{2, Rational(1)}};
  CHECK(match_catalog(ray, Window(-8, 8)) == "NP4");
  ray.gamma = {{5, Rational(1)}};
  CHECK(match_catalog(ray, Window(-8, 8)) == "unmatched");
}

TEST_CASE("classification reports are deterministic") {
  const ClassificationReport a =
      classify_shifting(GradedFamily::P6, -2, Window(-8, 8));
  const ClassificationReport b =
      classify_shifting(GradedFamily::P6, -2, Window(-8, 8));
  CHECK(dump_canonical(classification_to_json(a)) ==
        dump_canonical(classification_to_json(b)));
  const ClassificationReport c = classify_graded(Window(-3, 3));
  const ClassificationReport d = classify_graded(Window(-3, 3));
  CHECK(dump_canonical(classification_to_json(c)) ==
        dump_canonical(classification_to_json(d)));
}

TEST_CASE("window too small for any equation") {
  CHECK_THROWS_AS(
      (void)classify_shifting(GradedFamily::P5, 40, Window(-8, 8)), Error);
  try {
    (void)classify_shifting(GradedFamily::P5, 40, Window(-8, 8));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::window_too_small);
  }
}

TEST_CASE("exact nullspace on small systems") {
  // x + y = 0, y + z = 0 has the one-dimensional kernel (1, -1, 1).
  IntMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 1;
  m.at(1, 2) = 1;
  const NullspaceResult ns = nullspace(m);
  CHECK(ns.rank == 2);
  REQUIRE(ns.basis.size() == 1);
  const auto& v = ns.basis[0];
  // Normalize on the first coordinate.
  CHECK(v[1] / v[2] == Rational(-1));
  CHECK(v[0] / v[2] == Rational(1));

  // Full-rank system: trivial kernel.
  IntMatrix id(2, 2);
  id.at(0, 0) = 3;
  id.at(1, 1) = -7;
  CHECK(nullspace(id).basis.empty());

  // Zero matrix: everything is kernel.
  IntMatrix zero(2, 4);
  CHECK(nullspace(zero).basis.size() == 4);
}
