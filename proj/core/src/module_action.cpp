#include "postwitt/module_action.hpp"

#include <algorithm>

namespace postwitt {

namespace {

PolyScalar b_param() { return PolyScalar::param(Param::b); }
PolyScalar a_param() { return PolyScalar::param(Param::a); }

}  // namespace

const std::vector<std::string>& module_action_names() {
  static const std::vector<std::string> names = {
      "LP1", "LP3a", "LP5", "LNP1", "LNP3", "NP4-action", "NP5-action"};
  return names;
}

ModuleAction::ModuleAction(std::string name, std::optional<std::int64_t> nu)
    : name_(std::move(name)), nu_(nu) {
  auto require_nu = [&](std::vector<std::int64_t> admissible) {
    if (!nu_)
      raise(Errc::inadmissible_nu, name_ + " needs an explicit nu");
    if (std::find(admissible.begin(), admissible.end(), *nu_) ==
        admissible.end())
      raise(Errc::inadmissible_nu,
            "nu = " + std::to_string(*nu_) + " is not admissible for " + name_);
  };
  auto fixed_nu = [&](std::int64_t expected) {
    if (nu_ && *nu_ != expected)
      raise(Errc::inadmissible_nu,
            name_ + " has fixed nu = " + std::to_string(expected));
    nu_ = expected;
  };

  if (name_ == "LP1") {
    spec_ = catalog_lookup("P1").spec;
  } else if (name_ == "LP3a") {
    spec_ = catalog_lookup("P3a").spec;
  } else if (name_ == "LP5") {
    spec_ = catalog_lookup("P5").spec;
  } else if (name_ == "LNP1") {
    require_nu({1, 2});
    spec_ = catalog_lookup("NP1", nu_).spec;
  } else if (name_ == "LNP3") {
    require_nu({-2, -3, -4});
    spec_ = catalog_lookup("NP3", nu_).spec;
  } else if (name_ == "NP4-action") {
    fixed_nu(-1);
    spec_ = catalog_lookup("NP4", nu_).spec;
  } else if (name_ == "NP5-action") {
    fixed_nu(-2);
    spec_ = catalog_lookup("NP5", nu_).spec;
  } else {
    raise(Errc::unknown_name, "unknown module action '" + name_ + "'");
  }
}

WittElement ModuleAction::act_basis(std::int64_t m, std::int64_t n) const {
  WittElement out;
  const Rational rn(n);
  if (name_ == "LP1") {
    return out;
  }
  if (name_ == "LP3a") {
    if (m > 0) out.add_term(m + n, PolyScalar(Rational(n - m)));
    else if (m == 0) out.add_term(n, Rational(n) * a_param());
    return out;
  }
  if (name_ == "LP5") {
    if (m >= 2) out.add_term(m + n, PolyScalar(Rational(n - m)));
    return out;
  }
  const std::int64_t nu = *nu_;
  if (name_ == "LNP1") {
    if (m >= 0) out.add_term(m + n, PolyScalar(Rational(n - m)));
    else if (m == -nu) out.add_term(n, rn * b_param());
    return out;
  }
  if (name_ == "LNP3") {
    if (m == -nu) {
      out.add_term(n - nu, PolyScalar(Rational(n + nu)));
      out.add_term(n, rn * b_param());
    } else if (m >= 2) {
      out.add_term(m + n, PolyScalar(Rational(n - m)));
    }
    return out;
  }
  if (name_ == "NP4-action") {
    if (m >= 3) {
      out.add_term(m + n, PolyScalar(Rational(n - m)));
    } else if (m == 2) {
      out.add_term(n + 2, PolyScalar(Rational(n - 2)));
      out.add_term(n + 1, Rational(n - 1) * b_param());
    }
    return out;
  }
  // NP5-action
  if (m >= 4) {
    out.add_term(m + n, PolyScalar(Rational(n - m)));
  } else if (m == 2) {
    out.add_term(n + 2, PolyScalar(Rational(n - 2)));
    out.add_term(n, rn * b_param());
  } else if (m == 3) {
    out.add_term(n + 3, PolyScalar(Rational(n - 3)));
    out.add_term(n + 1, Rational(2) * Rational(n - 1) * b_param());
  }
  return out;
}

WittElement ModuleAction::act(const WittElement& x,
                              const WittElement& v) const {
  WittElement out;
  for (const auto& [m, cm] : x.support()) {
    for (const auto& [n, cn] : v.support()) {
      const PolyScalar scale = cm * cn;
      const WittElement image = act_basis(m, n);
      for (const auto& [index, coeff] : image.support()) {
        out.add_term(index, scale * coeff);
      }
    }
  }
  return out;
}

ModuleAction module_action(const std::string& name,
                           std::optional<std::int64_t> nu) {
  return ModuleAction(name, nu);
}

}  // namespace postwitt
