#include "postwitt/catalog.hpp"

#include <algorithm>

namespace postwitt {

namespace {

PolyScalar negative_a() { return -PolyScalar::param(Param::a); }
PolyScalar negative_b() { return -PolyScalar::param(Param::b); }

}  // namespace

std::string family_name(GradedFamily family) {
  switch (family) {
    case GradedFamily::P1: return "P1";
    case GradedFamily::P2: return "P2";
    case GradedFamily::P3: return "P3";
    case GradedFamily::P4: return "P4";
    case GradedFamily::P5: return "P5";
    case GradedFamily::P6: return "P6";
    case GradedFamily::P7: return "P7";
    case GradedFamily::P8: return "P8";
  }
  return "?";
}

GradedFamily family_from_name(const std::string& name) {
  for (auto family : kAllFamilies) {
    if (family_name(family) == name) return family;
  }
  // Accept the parametrized spellings of the two families with free f(0).
  if (name == "P3a") return GradedFamily::P3;
  if (name == "P4a") return GradedFamily::P4;
  raise(Errc::unknown_name, "unknown graded family '" + name + "'");
}

IndexFunction family_f(GradedFamily family) {
  switch (family) {
    case GradedFamily::P1:
      return IndexFunction::constant(PolyScalar(0));
    case GradedFamily::P2:
      return IndexFunction::constant(PolyScalar(-1));
    case GradedFamily::P3:
      return IndexFunction({{GuardKind::gt, 0, PolyScalar(-1)},
                            {GuardKind::eq, 0, negative_a()},
                            {GuardKind::otherwise, 0, PolyScalar(0)}});
    case GradedFamily::P4:
      return IndexFunction({{GuardKind::lt, 0, PolyScalar(-1)},
                            {GuardKind::eq, 0, negative_a()},
                            {GuardKind::otherwise, 0, PolyScalar(0)}});
    case GradedFamily::P5:
      return IndexFunction::step_ge(2, PolyScalar(-1), PolyScalar(0));
    case GradedFamily::P6:
      return IndexFunction::step_ge(2, PolyScalar(0), PolyScalar(-1));
    case GradedFamily::P7:
      return IndexFunction({{GuardKind::le, -2, PolyScalar(-1)},
                            {GuardKind::otherwise, 0, PolyScalar(0)}});
    case GradedFamily::P8:
      return IndexFunction({{GuardKind::le, -2, PolyScalar(0)},
                            {GuardKind::otherwise, 0, PolyScalar(-1)}});
  }
  raise(Errc::unknown_name, "bad family");
}

F0Kind family_f0_kind(GradedFamily family) {
  switch (family) {
    case GradedFamily::P3:
    case GradedFamily::P4:
      return F0Kind::free;
    case GradedFamily::P2:
    case GradedFamily::P6:
    case GradedFamily::P8:
      return F0Kind::minus_one;
    default:
      return F0Kind::zero;
  }
}

IndexFunction family_f_at(GradedFamily family, const Rational& f0) {
  return family_f(family).with_value_at(0, PolyScalar(f0));
}

const std::vector<std::string>& catalog_graded_names() {
  static const std::vector<std::string> names = {"P1", "P2", "P3a", "P4a",
                                                 "P5", "P6", "P7",  "P8"};
  return names;
}

const std::vector<std::string>& catalog_shifting_names() {
  static const std::vector<std::string> names = {
      "NP1", "NP2", "NP3", "NP4", "NP5", "NP6", "NP7", "NP8",
      "MP1", "MP2", "MP3", "MP4", "MP5", "MP6", "MP7", "MP8"};
  return names;
}

namespace {

struct ShiftingRow {
  GradedFamily family;
  Rational f0;  // value pinned at index 0
  /// g support description: fixed points or the moving point -nu.
  enum class GShape { point_minus_nu, point_fixed, ratio_pair } shape;
  std::int64_t fixed1 = 0;  // point_fixed / ratio_pair first support index
  std::int64_t fixed2 = 0;  // ratio_pair second support index (value -2b)
  std::vector<std::int64_t> nus;
};

const std::map<std::string, ShiftingRow>& shifting_rows() {
  using GF = GradedFamily;
  using Shape = ShiftingRow::GShape;
  static const std::map<std::string, ShiftingRow> rows = {
      {"NP1", {GF::P3, -1, Shape::point_minus_nu, 0, 0, {1, 2}}},
      {"NP2", {GF::P3, 0, Shape::point_minus_nu, 0, 0, {-1, -2}}},
      {"NP3", {GF::P5, 0, Shape::point_minus_nu, 0, 0, {-2, -3, -4}}},
      {"NP4", {GF::P5, 0, Shape::point_fixed, 2, 0, {-1}}},
      {"NP5", {GF::P5, 0, Shape::ratio_pair, 2, 3, {-2}}},
      {"NP6", {GF::P6, -1, Shape::point_minus_nu, 0, 0, {-2, -3, -4}}},
      {"NP7", {GF::P6, -1, Shape::point_fixed, 2, 0, {-1}}},
      {"NP8", {GF::P6, -1, Shape::ratio_pair, 2, 3, {-2}}},
      {"MP1", {GF::P4, -1, Shape::point_minus_nu, 0, 0, {-1, -2}}},
      {"MP2", {GF::P4, 0, Shape::point_minus_nu, 0, 0, {1, 2}}},
      {"MP3", {GF::P7, 0, Shape::point_minus_nu, 0, 0, {2, 3, 4}}},
      {"MP4", {GF::P7, 0, Shape::point_fixed, -2, 0, {1}}},
      {"MP5", {GF::P7, 0, Shape::ratio_pair, -2, -3, {2}}},
      {"MP6", {GF::P8, -1, Shape::point_minus_nu, 0, 0, {2, 3, 4}}},
      {"MP7", {GF::P8, -1, Shape::point_fixed, -2, 0, {1}}},
      {"MP8", {GF::P8, -1, Shape::ratio_pair, -2, -3, {2}}},
  };
  return rows;
}

IndexFunction row_g(const ShiftingRow& row, std::int64_t nu) {
  switch (row.shape) {
    case ShiftingRow::GShape::point_minus_nu:
      return IndexFunction::point(-nu, negative_b());
    case ShiftingRow::GShape::point_fixed:
      return IndexFunction::point(row.fixed1, negative_b());
    case ShiftingRow::GShape::ratio_pair:
      return IndexFunction::two_points(row.fixed1, negative_b(), row.fixed2,
                                       Rational(2) * negative_b());
  }
  raise(Errc::unknown_name, "bad row");
}

}  // namespace

const std::vector<std::int64_t>& catalog_admissible_nu(
    const std::string& name) {
  auto it = shifting_rows().find(name);
  if (it == shifting_rows().end())
    raise(Errc::unknown_name, "unknown shifting structure '" + name + "'");
  return it->second.nus;
}

CatalogEntry catalog_lookup(const std::string& raw_name,
                            std::optional<std::int64_t> nu) {
  // The two parametrized families answer to both spellings.
  const std::string name =
      raw_name == "P3" ? "P3a" : raw_name == "P4" ? "P4a" : raw_name;
  const auto& graded = catalog_graded_names();
  if (std::find(graded.begin(), graded.end(), name) != graded.end()) {
    if (nu)
      raise(Errc::inadmissible_nu,
            "graded structure '" + name + "' takes no shift");
    CatalogEntry entry;
    entry.name = name;
    GradedFamily family = family_from_name(name);
    entry.spec = GradedSpec{family_f(family)};
    if (family == GradedFamily::P3 || family == GradedFamily::P4)
      entry.params.insert(Param::a);
    return entry;
  }

  auto it = shifting_rows().find(name);
  if (it == shifting_rows().end())
    raise(Errc::unknown_name, "unknown structure '" + name + "'");
  const ShiftingRow& row = it->second;

  std::int64_t chosen;
  if (nu) {
    if (std::find(row.nus.begin(), row.nus.end(), *nu) == row.nus.end())
      raise(Errc::inadmissible_nu,
            "nu = " + std::to_string(*nu) + " is not admissible for " + name);
    chosen = *nu;
  } else if (row.nus.size() == 1) {
    chosen = row.nus.front();
  } else {
    raise(Errc::inadmissible_nu,
          name + " needs an explicit nu from its admissible set");
  }

  CatalogEntry entry;
  entry.name = name;
  entry.spec = make_shifting(family_f_at(row.family, row.f0),
                             row_g(row, chosen), chosen);
  entry.params.insert(Param::b);
  entry.admissible_nu = row.nus;
  entry.nu = chosen;
  return entry;
}

std::vector<CatalogEntry> catalog_all_shifting_instances() {
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_shifting_names()) {
    for (std::int64_t nu : catalog_admissible_nu(name)) {
      out.push_back(catalog_lookup(name, nu));
    }
  }
  return out;
}

}  // namespace postwitt
