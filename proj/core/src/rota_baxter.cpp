#include "postwitt/rota_baxter.hpp"

#include <algorithm>

namespace postwitt {

RBOperator make_rb_operator(IndexFunction f, IndexFunction g,
                            std::int64_t nu) {
  if (g.is_zero_everywhere()) {
    if (nu != 0)
      raise(Errc::invalid_argument,
            "a homogeneous operator (g = 0) must have nu = 0");
  } else if (nu == 0) {
    raise(Errc::nu_zero, "a nonzero tail g requires nu != 0");
  }
  return RBOperator{std::move(f), std::move(g), nu};
}

WittElement rb_apply(const RBOperator& op, const WittElement& x) {
  WittElement out;
  for (const auto& [m, c] : x.support()) {
    out.add_term(m, c * op.f.eval(m));
    const PolyScalar& gm = op.g.eval(m);
    if (!gm.is_zero()) out.add_term(m + op.nu, c * gm);
  }
  return out;
}

VerifyReport check_weight1(const RBOperator& op, const Window& w,
                           unsigned threads) {
  (void)threads;  // pair sweeps are cheap; kept single-threaded
  VerifyReport report;
  report.identity = "rota_baxter_weight1";
  report.window = w;
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    const WittElement x = WittElement::basis(m);
    const WittElement rx = rb_apply(op, x);
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      const WittElement y = WittElement::basis(n);
      const WittElement ry = rb_apply(op, y);
      WittElement residual = bracket(rx, ry);
      residual -= rb_apply(op, bracket(rx, y) + bracket(x, ry));
      residual -= rb_apply(op, bracket(x, y));
      ++report.total_checked;
      if (!residual.is_zero()) {
        ++report.failure_count;
        if (report.residuals.size() < kMaxResidualWitnesses)
          report.residuals.push_back(
              Residual{"weight1", {m, n}, std::move(residual)});
      }
    }
  }
  report.passed = (report.failure_count == 0);
  return report;
}

PostLieSpec derive_postlie(const RBOperator& op) {
  if (op.g.is_zero_everywhere()) return GradedSpec{op.f};
  return make_shifting(op.f, op.g, op.nu);
}

const std::vector<std::string>& rb_homogeneous_names() {
  static const std::vector<std::string> names = {"R1", "R2", "R3a", "R4a",
                                                 "R5", "R6", "R7",  "R8"};
  return names;
}

const std::vector<std::string>& rb_nonhomogeneous_names() {
  static const std::vector<std::string> names = {
      "NR1", "NR2", "NR3", "NR4", "NR5", "NR6", "NR7", "NR8",
      "MR1", "MR2", "MR3", "MR4", "MR5", "MR6", "MR7", "MR8"};
  return names;
}

namespace {

/// The operator catalog mirrors the post-Lie catalog index for index:
/// R_i carries the f of P_i, NR_i/MR_i carry the (f, g, nu) of NP_i/MP_i.
std::string paired_name(const std::string& rb_name) {
  if (rb_name.rfind("NR", 0) == 0) return "NP" + rb_name.substr(2);
  if (rb_name.rfind("MR", 0) == 0) return "MP" + rb_name.substr(2);
  if (rb_name.rfind('R', 0) == 0) {
    std::string tail = rb_name.substr(1);
    if (tail == "3a") return "P3a";
    if (tail == "4a") return "P4a";
    return "P" + tail;
  }
  raise(Errc::unknown_name, "unknown operator '" + rb_name + "'");
}

}  // namespace

std::string rb_paired_postlie_name(const std::string& rb_name) {
  return paired_name(rb_name);
}

const std::vector<std::int64_t>& rb_admissible_nu(const std::string& name) {
  const auto& hom = rb_homogeneous_names();
  if (std::find(hom.begin(), hom.end(), name) != hom.end()) {
    static const std::vector<std::int64_t> none;
    return none;
  }
  return catalog_admissible_nu(paired_name(name));
}

RBCatalogEntry rb_catalog_lookup(const std::string& name,
                                 std::optional<std::int64_t> nu) {
  const auto& hom = rb_homogeneous_names();
  const auto& nonhom = rb_nonhomogeneous_names();
  const bool is_hom = std::find(hom.begin(), hom.end(), name) != hom.end();
  if (!is_hom &&
      std::find(nonhom.begin(), nonhom.end(), name) == nonhom.end())
    raise(Errc::unknown_name, "unknown operator '" + name + "'");

  CatalogEntry paired = catalog_lookup(paired_name(name), nu);
  RBCatalogEntry entry;
  entry.name = name;
  entry.params = paired.params;
  entry.admissible_nu = paired.admissible_nu;
  entry.nu = paired.nu;
  if (is_hom) {
    entry.op = RBOperator{std::get<GradedSpec>(paired.spec).f,
                          IndexFunction::constant(PolyScalar(0)), 0};
  } else {
    const auto& shifting = std::get<ShiftingSpec>(paired.spec);
    entry.op = RBOperator{shifting.f, shifting.g, shifting.nu};
  }
  return entry;
}

std::vector<RBCatalogEntry> rb_catalog_all_instances() {
  std::vector<RBCatalogEntry> out;
  for (const auto& name : rb_homogeneous_names())
    out.push_back(rb_catalog_lookup(name));
  for (const auto& name : rb_nonhomogeneous_names()) {
    for (std::int64_t nu : rb_admissible_nu(name))
      out.push_back(rb_catalog_lookup(name, nu));
  }
  return out;
}

}  // namespace postwitt
