#pragma once

#include <stdexcept>
#include <string>

namespace postwitt {

enum class Errc {
  index_out_of_range,
  missing_parameter,
  unknown_name,
  inadmissible_nu,
  nu_zero,
  window_escape,
  denominator_zero,
  parameter_constraint,
  window_too_large,
  window_too_small,
  invalid_window,
  unsupported_variant,
  ambiguous_match,
  schema_mismatch,
  parse_error,
  invalid_argument,
};

std::string errc_name(Errc code);

/// Library-wide exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(errc_name(code) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline std::string errc_name(Errc code) {
  switch (code) {
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::missing_parameter: return "missing-parameter";
    case Errc::unknown_name: return "unknown-name";
    case Errc::inadmissible_nu: return "inadmissible-nu";
    case Errc::nu_zero: return "nu-zero";
    case Errc::window_escape: return "window-escape";
    case Errc::denominator_zero: return "denominator-zero";
    case Errc::parameter_constraint: return "parameter-constraint";
    case Errc::window_too_large: return "window-too-large";
    case Errc::window_too_small: return "window-too-small";
    case Errc::invalid_window: return "invalid-window";
    case Errc::unsupported_variant: return "unsupported-variant";
    case Errc::ambiguous_match: return "ambiguous-match";
    case Errc::schema_mismatch: return "schema-mismatch";
    case Errc::parse_error: return "parse-error";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown-error";
}

}  // namespace postwitt
