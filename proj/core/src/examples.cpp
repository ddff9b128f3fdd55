#include "postwitt/examples.hpp"

namespace postwitt {

Rational rational_graded_phi(const Rational& alpha, const Rational& eps,
                             std::int64_t m, std::int64_t n) {
  const Rational den = 1 + eps * Rational(m + n);
  if (den == 0)
    raise(Errc::denominator_zero,
          "1 + eps*(m+n) vanishes at (m, n) = (" + std::to_string(m) + ", " +
              std::to_string(n) + ")");
  const Rational num =
      (alpha + Rational(n) + alpha * eps * Rational(m)) * (1 + eps * Rational(n));
  return -num / den;
}

PostLieSpec rational_graded_table(const Rational& alpha, const Rational& eps,
                                  const Window& pair_range) {
  // In-window denominators first, so a window that actually hits a pole is
  // reported as denominator-zero regardless of the global eps condition.
  for (std::int64_t m = pair_range.lo; m <= pair_range.hi; ++m) {
    for (std::int64_t n = pair_range.lo; n <= pair_range.hi; ++n) {
      if (1 + eps * Rational(m + n) == 0)
        raise(Errc::denominator_zero,
              "1 + eps*(m+n) vanishes at (m, n) = (" + std::to_string(m) +
                  ", " + std::to_string(n) + ")");
    }
  }
  // eps = 0 or 1/eps not an integer; anything else has a pole somewhere on Z.
  if (eps != 0 && numerator(eps) == 1)
    raise(Errc::parameter_constraint,
          "1/eps = " + rational_to_string(Rational(1) / eps) +
              " is an integer; the product does not extend to all of Z");
  if (eps != 0 && numerator(eps) == -1)
    raise(Errc::parameter_constraint,
          "1/eps = " + rational_to_string(Rational(1) / eps) +
              " is an integer; the product does not extend to all of Z");

  TableSpec table;
  table.m_range = pair_range;
  table.n_range = pair_range;
  for (std::int64_t m = pair_range.lo; m <= pair_range.hi; ++m) {
    for (std::int64_t n = pair_range.lo; n <= pair_range.hi; ++n) {
      const Rational phi = rational_graded_phi(alpha, eps, m, n);
      if (phi == 0) continue;
      table.entries[{m, n}][m + n] = PolyScalar(phi);
    }
  }
  return table;
}

PostLieSpec constant_shift_table(const PolyScalar& alpha, const PolyScalar& mu,
                                 std::int64_t nu, const Window& pair_range) {
  if (nu == 0) raise(Errc::nu_zero, "the shift nu must be nonzero");
  TableSpec table;
  table.m_range = pair_range;
  table.n_range = pair_range;
  for (std::int64_t m = pair_range.lo; m <= pair_range.hi; ++m) {
    for (std::int64_t n = pair_range.lo; n <= pair_range.hi; ++n) {
      std::map<std::int64_t, PolyScalar> terms;
      PolyScalar phi = -(PolyScalar(Rational(n)) + alpha);
      if (!phi.is_zero()) terms[m + n] = phi;
      if (!mu.is_zero()) terms[m + n + nu] = mu;  // nu != 0, distinct key
      if (!terms.empty()) table.entries[{m, n}] = std::move(terms);
    }
  }
  return table;
}

}  // namespace postwitt
