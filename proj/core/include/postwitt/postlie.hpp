#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <variant>

#include "postwitt/index_function.hpp"
#include "postwitt/window.hpp"
#include "postwitt/witt.hpp"

namespace postwitt {

/// Product preserving the grading: L_m o L_n = (m - n) f(m) L_{m+n}.
struct GradedSpec {
  IndexFunction f;
};

/// Product with one shifted tail:
///   L_m o L_n = (m - n) f(m) L_{m+n} + (m - n + nu) g(m) L_{m+n+nu},
/// nu a fixed nonzero integer.
struct ShiftingSpec {
  IndexFunction f;
  IndexFunction g;
  std::int64_t nu = 0;
};

/// Explicit coefficient table over a declared rectangle of index pairs.
/// Each entry lists the full product of L_m o L_n as a sparse term map.
struct TableSpec {
  Window m_range;
  Window n_range;
  std::map<std::pair<std::int64_t, std::int64_t>,
           std::map<std::int64_t, PolyScalar>>
      entries;
};

using PostLieSpec = std::variant<GradedSpec, ShiftingSpec, TableSpec>;

ShiftingSpec make_shifting(IndexFunction f, IndexFunction g, std::int64_t nu);

/// L_m o L_n on basis indices, per the spec variant.
WittElement circ_basis(const PostLieSpec& spec, std::int64_t m,
                       std::int64_t n);

/// Bilinear extension of the product to arbitrary elements.
WittElement circ(const PostLieSpec& spec, const WittElement& x,
                 const WittElement& y);

/// {x, y} = x o y - y o x + [x, y].
WittElement induced_bracket(const PostLieSpec& spec, const WittElement& x,
                            const WittElement& y);

/// Transport through the Witt automorphism tau(L_m) = -L_{-m}:
/// graded f(m) -> f(-m); shifting additionally g(m) -> g(-m), nu -> -nu.
PostLieSpec transport_tau(const PostLieSpec& spec);

/// Transport of a graded spec through L_m -> eps c^m L_{eps m}:
/// f(m) -> f(eps m); the c factors cancel in the graded form.
PostLieSpec transport_scaling(const PostLieSpec& spec, int eps,
                              const Rational& c);

/// Structural (descriptor) equality: same variant and identical data.
bool spec_equal(const PostLieSpec& lhs, const PostLieSpec& rhs);

}  // namespace postwitt
