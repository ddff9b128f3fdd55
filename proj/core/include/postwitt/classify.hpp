#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "postwitt/catalog.hpp"
#include "postwitt/window.hpp"

namespace postwitt {

struct F0Constraint {
  enum class Kind { free, equals };
  Kind kind = Kind::free;
  Rational value;  // meaningful when kind == equals

  friend bool operator==(const F0Constraint&, const F0Constraint&) = default;
};

/// One window-consistent graded assignment: values in {0, -1} on the
/// nonzero window indices, the value at 0 handled symbolically.
struct GradedSolution {
  std::map<std::int64_t, int> f_values;
  F0Constraint f0;

  friend bool operator==(const GradedSolution&,
                         const GradedSolution&) = default;
};

/// One solution ray of the shifting system: direction vector over the
/// window normalized so the lowest-index nonzero entry is 1; the tail is
/// b * gamma for any nonzero b.
struct ShiftingRay {
  GradedFamily family{};
  std::optional<Rational> f0;  // pinned f(0) for families with free f(0)
  std::int64_t nu = 0;
  std::map<std::int64_t, Rational> gamma;
  int nullspace_dim = 0;
};

struct ClassifiedSolution {
  std::variant<GradedSolution, ShiftingRay> data;
  /// Catalog name, "unmatched", or "ambiguous(...)" on tiny windows.
  std::string matched;
};

struct ClassificationReport {
  std::string mode;  // "graded" or "shifting"
  Window window;
  std::vector<ClassifiedSolution> solutions;
  std::optional<std::string> oracle_digest;
  /// Set when a nullspace of dimension >= 2 forced the bounded
  /// ray-search heuristic; such runs deserve a manual look.
  bool needs_review = false;
  std::vector<std::pair<std::string, std::string>> notes;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1u << 24;

/// Enumerates every assignment f: (w \ {0}) -> {0, -1}, keeps those
/// consistent with the graded functional equation inside the window
/// (the value at 0 solved symbolically), and labels each with the unique
/// catalog family it restricts to.
ClassificationReport classify_graded(
    const Window& w, std::uint64_t budget = kDefaultEnumerationBudget);

/// Solves the shifting system for one (family, nu): exact nullspace of the
/// linear equation set, then the scale-invariant quadratic filter. For the
/// two families with free f(0) both pinned values {-1, 0} are probed.
ClassificationReport classify_shifting(GradedFamily family, std::int64_t nu,
                                       const Window& w);

/// Unique catalog family whose restriction to the window matches, or
/// "unmatched". Raises ambiguous-match when several families coincide on a
/// tiny window.
std::string match_catalog(const GradedSolution& solution, const Window& w);
std::string match_catalog(const ShiftingRay& ray, const Window& w);

/// Restriction of a catalog family's index function to a window; used for
/// distinctness checks between families.
std::vector<std::pair<std::int64_t, PolyScalar>> family_restriction(
    GradedFamily family, const Window& w);

}  // namespace postwitt
