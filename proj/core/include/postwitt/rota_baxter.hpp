#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "postwitt/catalog.hpp"
#include "postwitt/verify.hpp"

namespace postwitt {

/// Linear map L_m -> f(m) L_m + g(m) L_{m+nu}. A homogeneous operator has
/// g identically zero and nu = 0; otherwise nu is nonzero.
struct RBOperator {
  IndexFunction f;
  IndexFunction g;
  std::int64_t nu = 0;
};

RBOperator make_rb_operator(IndexFunction f, IndexFunction g, std::int64_t nu);

struct RBCatalogEntry {
  std::string name;
  RBOperator op;
  std::set<Param> params;
  std::vector<std::int64_t> admissible_nu;
  std::optional<std::int64_t> nu;
};

/// Linear extension of the operator to an arbitrary element.
WittElement rb_apply(const RBOperator& op, const WittElement& x);

/// Weight-one identity
///   [R(x), R(y)] = R([R(x), y] + [x, R(y)]) + R([x, y])
/// on all basis pairs from the window, symbolically in the parameters.
VerifyReport check_weight1(const RBOperator& op, const Window& w,
                           unsigned threads = 0);

/// The product x o y = [R(x), y]: graded with phi(m,n) = (m-n) f(m) for a
/// homogeneous operator, otherwise shifting with the extra
/// (m-n+nu) g(m) L_{m+n+nu} tail.
PostLieSpec derive_postlie(const RBOperator& op);

/// Homogeneous names: R1, R2, R3a, R4a, R5..R8.
const std::vector<std::string>& rb_homogeneous_names();
/// Non-homogeneous names: NR1..NR8, MR1..MR8.
const std::vector<std::string>& rb_nonhomogeneous_names();

const std::vector<std::int64_t>& rb_admissible_nu(const std::string& name);

RBCatalogEntry rb_catalog_lookup(const std::string& name,
                                 std::optional<std::int64_t> nu = std::nullopt);

/// Every (name, nu) instance of the operator catalog, homogeneous first.
std::vector<RBCatalogEntry> rb_catalog_all_instances();

/// Name of the post-Lie catalog entry with the same index (R5 -> P5,
/// NR3 -> NP3, MR8 -> MP8).
std::string rb_paired_postlie_name(const std::string& rb_name);

}  // namespace postwitt
