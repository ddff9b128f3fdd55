#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "postwitt/index_function.hpp"
#include "postwitt/postlie.hpp"
#include "postwitt/window.hpp"

namespace postwitt {

/// A concrete counterexample witness: the identity instance that failed and
/// its nonzero value.
struct Residual {
  std::string identity;
  std::vector<std::int64_t> indices;
  std::variant<PolyScalar, WittElement> value;

  std::string value_render() const;
};

inline constexpr std::size_t kMaxResidualWitnesses = 16;

struct VerifyReport {
  std::string identity;
  Window window;
  std::uint64_t total_checked = 0;
  std::uint64_t failure_count = 0;
  /// First witnesses in index order, capped at kMaxResidualWitnesses.
  std::vector<Residual> residuals;
  bool passed = false;
  /// Extra key/value detail (sub-check verdicts), deterministic order.
  std::vector<std::pair<std::string, std::string>> notes;
};

/// Compatibility axioms of the product with the Witt bracket:
///   [x,y] o z = x o (y o z) - y o (x o z) - <x,y> o z
///   x o [y,z] = [x o y, z] + [y, x o z]
/// evaluated on all basis triples from the window. Passing means every
/// residual is the zero polynomial, i.e. holds for all parameter values.
VerifyReport check_postlie_def11(const PostLieSpec& spec, const Window& w,
                                 unsigned threads = 0);

/// Which Lie bracket sits in the {,} slot of the second axiom system:
/// the Witt bracket itself (products defined over the Witt algebra in the
/// bracket role), or the bracket induced from the product via
/// {x,y} = x o y - y o x + [x,y].
enum class BracketSlot { witt, induced };

/// Second axiom system:
///   {x,y} o z = x o (y o z) - y o (x o z)
///   x o {y,z} - {x o y, z} - {y, x o z}
///     = x o <y,z> - <x o y, z> - <y, x o z>
VerifyReport check_postlie_def43(const PostLieSpec& spec, const Window& w,
                                 BracketSlot slot = BracketSlot::witt,
                                 unsigned threads = 0);

/// Cross-validation of the two axiom systems: with {,} taken from the
/// induced bracket, the first system holds at a triple iff the second does
/// (residuals agree), and {x,y} - <x,y> recovers the Witt bracket.
VerifyReport check_equivalence(const PostLieSpec& spec, const Window& w,
                               unsigned threads = 0);

/// Jacobi identity for the induced bracket on basis triples.
VerifyReport check_jacobi(const PostLieSpec& spec, const Window& w,
                          unsigned threads = 0);

/// Functional equation for graded products,
///   (m-n)(f(m+n) + f(m)f(m+n) + f(n)f(m+n) - f(m)f(n)) = 0,
/// plus the index-set conditions: f(m) in {0,-1} off 0, the zero set closed
/// under addition, and the -1 set closed under addition (m != n).
VerifyReport check_graded_feq(const IndexFunction& f, const Window& w);

/// Functional equations for shifting products: the graded equation on f,
/// the quadratic equation on g, the mixed linear equation, and the derived
/// single-variable consequence nu g(m) g(-nu) = (m + 2 nu) g(m)^2.
VerifyReport check_shifting_feqs(const IndexFunction& f,
                                 const IndexFunction& g, std::int64_t nu,
                                 const Window& w);

/// Module law {L_m, L_n} . v_p = L_m . (L_n . v_p) - L_n . (L_m . v_p)
/// for one of the named actions.
VerifyReport check_module(const std::string& name, const Window& w,
                          std::optional<std::int64_t> nu = std::nullopt,
                          unsigned threads = 0);

}  // namespace postwitt
