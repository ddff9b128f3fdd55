#pragma once

#include "postwitt/postlie.hpp"

namespace postwitt {

/// phi(m, n) = -(alpha + n + alpha*eps*m)(1 + eps*n) / (1 + eps*(m + n))
/// at a single index pair. Raises denominator-zero when 1 + eps(m+n) = 0.
Rational rational_graded_phi(const Rational& alpha, const Rational& eps,
                             std::int64_t m, std::int64_t n);

/// Explicit table of the product L_m o L_n = phi(m, n) L_{m+n} with the
/// rational closed form above, over the given rectangle of index pairs.
/// Checks all in-rectangle denominators first (denominator-zero names the
/// first offending pair), then the global condition eps = 0 or 1/eps not an
/// integer (parameter-constraint otherwise).
PostLieSpec rational_graded_table(const Rational& alpha, const Rational& eps,
                                  const Window& pair_range);

/// Two-term table L_m o L_n = -(n + alpha) L_{m+n} + mu L_{m+n+nu} over the
/// given rectangle. alpha and mu may be formal parameters; nu must be
/// nonzero.
PostLieSpec constant_shift_table(const PolyScalar& alpha, const PolyScalar& mu,
                                 std::int64_t nu,
                                 const Window& pair_range = Window(-32, 32));

}  // namespace postwitt
