#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "postwitt/poly.hpp"

namespace postwitt {

enum class GuardKind { ge, le, eq, gt, lt, otherwise };

/// One piece of a piecewise function of an integer index.
struct Piece {
  GuardKind kind;
  std::int64_t threshold = 0;  // ignored for `otherwise`
  PolyScalar value;

  bool matches(std::int64_t m) const {
    switch (kind) {
      case GuardKind::ge: return m >= threshold;
      case GuardKind::le: return m <= threshold;
      case GuardKind::eq: return m == threshold;
      case GuardKind::gt: return m > threshold;
      case GuardKind::lt: return m < threshold;
      case GuardKind::otherwise: return true;
    }
    return false;
  }
};

/// Piecewise PolyScalar-valued function on Z. First matching piece wins;
/// construction rejects piece lists that do not cover all of Z.
class IndexFunction {
 public:
  /// Maximal interval with a constant value, closed at finite ends;
  /// lo/hi are nullopt for -inf/+inf.
  struct Interval {
    std::optional<std::int64_t> lo, hi;
    PolyScalar value;

    friend bool operator==(const Interval&, const Interval&) = default;
  };

  /// Identically zero.
  IndexFunction() : IndexFunction({{GuardKind::otherwise, 0, PolyScalar()}}) {}
  explicit IndexFunction(std::vector<Piece> pieces);

  static IndexFunction constant(PolyScalar value);
  /// f(m) = value for m = at, zero elsewhere.
  static IndexFunction point(std::int64_t at, PolyScalar value);
  /// f(m) = value for m at the two given points, zero elsewhere.
  static IndexFunction two_points(std::int64_t at1, PolyScalar v1,
                                  std::int64_t at2, PolyScalar v2);
  /// f(m) = high for m >= split, low otherwise.
  static IndexFunction step_ge(std::int64_t split, PolyScalar high,
                               PolyScalar low);

  const PolyScalar& eval(std::int64_t m) const;
  const std::vector<Piece>& pieces() const { return pieces_; }

  /// m -> f(-m).
  IndexFunction reflected() const;
  /// Same function with the value at one index replaced.
  IndexFunction with_value_at(std::int64_t at, PolyScalar value) const;

  bool is_zero_everywhere() const;

  /// Canonical decomposition into maximal constant intervals, ascending.
  /// Semantic equality of functions compares these.
  const std::vector<Interval>& canonical_intervals() const {
    return intervals_;
  }

  friend bool operator==(const IndexFunction& f, const IndexFunction& g) {
    return f.intervals_ == g.intervals_;
  }
  friend bool operator!=(const IndexFunction& f, const IndexFunction& g) {
    return !(f == g);
  }

  std::string render() const;

 private:
  void build_intervals();
  std::vector<Piece> pieces_;
  std::vector<Interval> intervals_;
};

}  // namespace postwitt
