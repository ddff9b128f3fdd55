#pragma once

#include <cstdint>
#include <string>

#include "postwitt/errors.hpp"

namespace postwitt {

/// Inclusive integer interval of basis indices. Desk-scale guard:
/// spans above 64 are rejected.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  Window() = default;
  Window(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
    if (lo > hi)
      raise(Errc::invalid_window,
            "window " + render() + " has lo > hi");
    if (hi - lo > 64)
      raise(Errc::invalid_window,
            "window " + render() + " exceeds the span guard of 64");
  }

  bool contains(std::int64_t m) const { return m >= lo && m <= hi; }
  std::int64_t size() const { return hi - lo + 1; }
  std::string render() const {
    return std::to_string(lo) + ".." + std::to_string(hi);
  }

  friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace postwitt
