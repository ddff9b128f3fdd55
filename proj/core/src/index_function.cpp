#include "postwitt/index_function.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "postwitt/errors.hpp"

namespace postwitt {

IndexFunction::IndexFunction(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty())
    raise(Errc::invalid_argument, "index function needs at least one piece");
  build_intervals();
}

IndexFunction IndexFunction::constant(PolyScalar value) {
  return IndexFunction({{GuardKind::otherwise, 0, std::move(value)}});
}

IndexFunction IndexFunction::point(std::int64_t at, PolyScalar value) {
  return IndexFunction(
      {{GuardKind::eq, at, std::move(value)}, {GuardKind::otherwise, 0, {}}});
}

IndexFunction IndexFunction::two_points(std::int64_t at1, PolyScalar v1,
                                        std::int64_t at2, PolyScalar v2) {
  return IndexFunction({{GuardKind::eq, at1, std::move(v1)},
                        {GuardKind::eq, at2, std::move(v2)},
                        {GuardKind::otherwise, 0, {}}});
}

IndexFunction IndexFunction::step_ge(std::int64_t split, PolyScalar high,
                                     PolyScalar low) {
  return IndexFunction({{GuardKind::ge, split, std::move(high)},
                        {GuardKind::otherwise, 0, std::move(low)}});
}

const PolyScalar& IndexFunction::eval(std::int64_t m) const {
  for (const auto& piece : pieces_) {
    if (piece.matches(m)) return piece.value;
  }
  // Unreachable: construction verified total coverage.
  raise(Errc::invalid_argument, "index function has a coverage gap");
}

namespace {

// Sentinels for half-infinite interval arithmetic; far outside any
// threshold ever used but safe against +-1 adjustments.
constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min() / 4;
constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

void IndexFunction::build_intervals() {
  // Breakpoint grid: thresholds and their neighbours partition Z into
  // stretches on which every guard is constant.
  std::set<std::int64_t> cuts;
  for (const auto& piece : pieces_) {
    if (piece.kind == GuardKind::otherwise) continue;
    for (std::int64_t d = -1; d <= 1; ++d) cuts.insert(piece.threshold + d);
  }
  cuts.insert(kNegInf);
  cuts.insert(kPosInf);

  std::vector<std::int64_t> grid(cuts.begin(), cuts.end());
  bool has_otherwise =
      std::any_of(pieces_.begin(), pieces_.end(), [](const Piece& p) {
        return p.kind == GuardKind::otherwise;
      });

  struct Run {
    std::int64_t lo, hi;
    PolyScalar value;
  };
  std::vector<Run> runs;
  auto eval_checked = [&](std::int64_t m) -> const PolyScalar& {
    for (const auto& piece : pieces_) {
      if (piece.matches(m)) return piece.value;
    }
    raise(Errc::invalid_argument,
          "piece guards do not cover index " +
              (m <= kNegInf       ? std::string("-inf")
               : m >= kPosInf - 1 ? std::string("+inf")
                                  : std::to_string(m)));
  };

  // Representatives: each grid point, plus one interior point per gap.
  std::vector<std::pair<std::int64_t, std::int64_t>> segments;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    segments.emplace_back(grid[i], grid[i]);
    if (grid[i] + 1 < grid[i + 1])
      segments.emplace_back(grid[i] + 1, grid[i + 1] - 1);
  }
  segments.emplace_back(grid.back(), grid.back());

  if (!has_otherwise) {
    // Half-infinite coverage needs an unbounded guard on each side.
    bool covers_neg = false, covers_pos = false;
    for (const auto& piece : pieces_) {
      if (piece.kind == GuardKind::le || piece.kind == GuardKind::lt)
        covers_neg = true;
      if (piece.kind == GuardKind::ge || piece.kind == GuardKind::gt)
        covers_pos = true;
    }
    if (!covers_neg) eval_checked(kNegInf);  // raises
    if (!covers_pos) eval_checked(kPosInf);  // raises
  }

  for (const auto& [lo, hi] : segments) {
    const PolyScalar& v = eval_checked(lo);
    if (!runs.empty() && runs.back().value == v && runs.back().hi + 1 == lo) {
      runs.back().hi = hi;
    } else {
      runs.push_back({lo, hi, v});
    }
  }

  intervals_.clear();
  for (const auto& run : runs) {
    Interval iv;
    if (run.lo > kNegInf) iv.lo = run.lo;
    if (run.hi < kPosInf) iv.hi = run.hi;
    iv.value = run.value;
    intervals_.push_back(std::move(iv));
  }
}

IndexFunction IndexFunction::reflected() const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (const auto& piece : pieces_) {
    Piece q = piece;
    switch (piece.kind) {
      case GuardKind::ge: q.kind = GuardKind::le; q.threshold = -piece.threshold; break;
      case GuardKind::le: q.kind = GuardKind::ge; q.threshold = -piece.threshold; break;
      case GuardKind::gt: q.kind = GuardKind::lt; q.threshold = -piece.threshold; break;
      case GuardKind::lt: q.kind = GuardKind::gt; q.threshold = -piece.threshold; break;
      case GuardKind::eq: q.threshold = -piece.threshold; break;
      case GuardKind::otherwise: break;
    }
    out.push_back(std::move(q));
  }
  return IndexFunction(std::move(out));
}

IndexFunction IndexFunction::with_value_at(std::int64_t at,
                                           PolyScalar value) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size() + 1);
  out.push_back({GuardKind::eq, at, std::move(value)});
  out.insert(out.end(), pieces_.begin(), pieces_.end());
  return IndexFunction(std::move(out));
}

bool IndexFunction::is_zero_everywhere() const {
  return std::all_of(intervals_.begin(), intervals_.end(),
                     [](const Interval& iv) { return iv.value.is_zero(); });
}

std::string IndexFunction::render() const {
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += "; ";
    std::string range;
    if (!iv.lo && !iv.hi) {
      range = "all m";
    } else if (!iv.lo) {
      range = "m <= " + std::to_string(*iv.hi);
    } else if (!iv.hi) {
      range = "m >= " + std::to_string(*iv.lo);
    } else if (*iv.lo == *iv.hi) {
      range = "m = " + std::to_string(*iv.lo);
    } else {
      range = std::to_string(*iv.lo) + " <= m <= " + std::to_string(*iv.hi);
    }
    out += iv.value.render() + " for " + range;
  }
  return out;
}

}  // namespace postwitt
