#pragma once

#include <optional>
#include <string>
#include <vector>

#include "postwitt/catalog.hpp"

namespace postwitt {

/// A named action L_m . v_n of the Witt basis on the module basis {v_i}.
/// Module elements are sparse index -> coefficient combinations over the
/// v-basis and reuse the WittElement container.
class ModuleAction {
 public:
  ModuleAction(std::string name, std::optional<std::int64_t> nu);

  const std::string& name() const { return name_; }
  std::optional<std::int64_t> nu() const { return nu_; }

  /// L_m . v_n from the case table of the action.
  WittElement act_basis(std::int64_t m, std::int64_t n) const;

  /// Linear extension to x . v for a Lie element x and module element v.
  WittElement act(const WittElement& x, const WittElement& v) const;

  /// The product whose left multiplications this action is; its induced
  /// bracket is the Lie algebra acting on the module.
  const PostLieSpec& underlying_spec() const { return spec_; }

 private:
  std::string name_;
  std::optional<std::int64_t> nu_;
  PostLieSpec spec_;
};

const std::vector<std::string>& module_action_names();

ModuleAction module_action(const std::string& name,
                           std::optional<std::int64_t> nu = std::nullopt);

}  // namespace postwitt
