#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postwitt/postlie.hpp"

namespace postwitt {

/// The eight families of graded products, named by the index-function shape.
enum class GradedFamily { P1, P2, P3, P4, P5, P6, P7, P8 };

inline constexpr GradedFamily kAllFamilies[] = {
    GradedFamily::P1, GradedFamily::P2, GradedFamily::P3, GradedFamily::P4,
    GradedFamily::P5, GradedFamily::P6, GradedFamily::P7, GradedFamily::P8};

std::string family_name(GradedFamily family);
GradedFamily family_from_name(const std::string& name);

/// The family's index function. P3/P4 carry the free parameter `a` at
/// index 0 (stored as -a so that L_0 o L_n = n a L_n).
IndexFunction family_f(GradedFamily family);

enum class F0Kind { free, zero, minus_one };
F0Kind family_f0_kind(GradedFamily family);

/// Family function with the value at 0 pinned to a concrete rational.
IndexFunction family_f_at(GradedFamily family, const Rational& f0);

struct CatalogEntry {
  std::string name;
  PostLieSpec spec;
  std::set<Param> params;
  /// Admissible shift values; empty for graded entries.
  std::vector<std::int64_t> admissible_nu;
  /// The shift the entry was materialized with (shifting entries only).
  std::optional<std::int64_t> nu;
};

/// Graded names: P1, P2, P3a, P4a, P5..P8.
const std::vector<std::string>& catalog_graded_names();
/// Shifting names: NP1..NP8, MP1..MP8.
const std::vector<std::string>& catalog_shifting_names();

/// Admissible shifts for a shifting catalog name.
const std::vector<std::int64_t>& catalog_admissible_nu(const std::string& name);

/// Looks up a catalog entry. Shifting entries need `nu` when more than one
/// shift is admissible; a provided `nu` must be admissible.
CatalogEntry catalog_lookup(const std::string& name,
                            std::optional<std::int64_t> nu = std::nullopt);

/// Every (name, nu) instance of the shifting catalog.
std::vector<CatalogEntry> catalog_all_shifting_instances();

}  // namespace postwitt
