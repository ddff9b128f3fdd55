#include "postwitt/postlie.hpp"

namespace postwitt {

ShiftingSpec make_shifting(IndexFunction f, IndexFunction g, std::int64_t nu) {
  if (nu == 0) raise(Errc::nu_zero, "shifting product requires nu != 0");
  return ShiftingSpec{std::move(f), std::move(g), nu};
}

WittElement circ_basis(const PostLieSpec& spec, std::int64_t m,
                       std::int64_t n) {
  WittElement out;
  if (const auto* graded = std::get_if<GradedSpec>(&spec)) {
    out.add_term(m + n, Rational(m - n) * graded->f.eval(m));
  } else if (const auto* shifting = std::get_if<ShiftingSpec>(&spec)) {
    out.add_term(m + n, Rational(m - n) * shifting->f.eval(m));
    out.add_term(m + n + shifting->nu,
                 Rational(m - n + shifting->nu) * shifting->g.eval(m));
  } else {
    const auto& table = std::get<TableSpec>(spec);
    if (!table.m_range.contains(m) || !table.n_range.contains(n))
      raise(Errc::window_escape,
            "pair (" + std::to_string(m) + ", " + std::to_string(n) +
                ") outside the declared table rectangle " +
                table.m_range.render() + " x " + table.n_range.render());
    auto it = table.entries.find({m, n});
    if (it != table.entries.end()) {
      for (const auto& [index, coeff] : it->second) out.add_term(index, coeff);
    }
  }
  return out;
}

WittElement circ(const PostLieSpec& spec, const WittElement& x,
                 const WittElement& y) {
  WittElement out;
  for (const auto& [m, cm] : x.support()) {
    for (const auto& [n, cn] : y.support()) {
      const PolyScalar scale = cm * cn;
      const WittElement product = circ_basis(spec, m, n);
      for (const auto& [index, coeff] : product.support()) {
        out.add_term(index, scale * coeff);
      }
    }
  }
  return out;
}

WittElement induced_bracket(const PostLieSpec& spec, const WittElement& x,
                            const WittElement& y) {
  return circ(spec, x, y) - circ(spec, y, x) + bracket(x, y);
}

PostLieSpec transport_tau(const PostLieSpec& spec) {
  if (const auto* graded = std::get_if<GradedSpec>(&spec)) {
    return GradedSpec{graded->f.reflected()};
  }
  if (const auto* shifting = std::get_if<ShiftingSpec>(&spec)) {
    return ShiftingSpec{shifting->f.reflected(), shifting->g.reflected(),
                        -shifting->nu};
  }
  raise(Errc::unsupported_variant,
        "tau transport is defined for graded and shifting products only");
}

PostLieSpec transport_scaling(const PostLieSpec& spec, int eps,
                              const Rational& c) {
  if (eps != 1 && eps != -1)
    raise(Errc::invalid_argument, "eps must be +1 or -1");
  if (c == 0) raise(Errc::invalid_argument, "c must be nonzero");
  const auto* graded = std::get_if<GradedSpec>(&spec);
  if (!graded)
    raise(Errc::unsupported_variant,
          "scaling transport is defined for graded products only");
  return eps == 1 ? *graded : GradedSpec{graded->f.reflected()};
}

bool spec_equal(const PostLieSpec& lhs, const PostLieSpec& rhs) {
  if (lhs.index() != rhs.index()) return false;
  if (const auto* a = std::get_if<GradedSpec>(&lhs)) {
    return a->f == std::get<GradedSpec>(rhs).f;
  }
  if (const auto* a = std::get_if<ShiftingSpec>(&lhs)) {
    const auto& b = std::get<ShiftingSpec>(rhs);
    return a->nu == b.nu && a->f == b.f && a->g == b.g;
  }
  const auto& a = std::get<TableSpec>(lhs);
  const auto& b = std::get<TableSpec>(rhs);
  return a.m_range == b.m_range && a.n_range == b.n_range &&
         a.entries == b.entries;
}

}  // namespace postwitt
