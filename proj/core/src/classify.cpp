#include "postwitt/classify.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "postwitt/linsolve.hpp"

namespace postwitt {

namespace {

std::string rational_str(const Rational& q) { return rational_to_string(q); }

std::string gamma_render(const std::map<std::int64_t, Rational>& gamma) {
  std::string out;
  for (const auto& [m, v] : gamma) {
    if (!out.empty()) out += ", ";
    out += std::to_string(m) + ": " + rational_str(v);
  }
  return "{" + out + "}";
}

}  // namespace

ClassificationReport classify_graded(const Window& w, std::uint64_t budget) {
  if (!(w.lo < 0 && 0 < w.hi))
    raise(Errc::invalid_window,
          "graded classification needs lo < 0 < hi, got " + w.render());

  std::vector<std::int64_t> indices;
  for (std::int64_t m = w.lo; m <= w.hi; ++m)
    if (m != 0) indices.push_back(m);
  const std::size_t k = indices.size();
  if (k >= 63 || (std::uint64_t(1) << k) > budget)
    raise(Errc::window_too_large,
          "2^" + std::to_string(k) + " assignments exceed the budget of " +
              std::to_string(budget));

  std::map<std::int64_t, std::size_t> slot;
  for (std::size_t i = 0; i < k; ++i) slot[indices[i]] = i;

  // Constraint rows precomputed as index triples into the assignment.
  // Value rows: pairs m < n, both nonzero, m+n in window and nonzero.
  struct ValueRow {
    std::size_t m_slot, n_slot, s_slot;
  };
  std::vector<ValueRow> value_rows;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::int64_t s = indices[i] + indices[j];
      if (s == 0 || !w.contains(s)) continue;
      value_rows.push_back({i, j, slot.at(s)});
    }
  }
  // Rows with m + n = 0 constrain f(0) instead.
  std::vector<std::pair<std::size_t, std::size_t>> zero_sum_rows;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t m = indices[i];
    if (m > 0 && w.contains(-m)) zero_sum_rows.push_back({i, slot.at(-m)});
  }

  ClassificationReport report;
  report.mode = "graded";
  report.window = w;

  const std::uint64_t total = std::uint64_t(1) << k;
  auto scan_range = [&](std::uint64_t first, std::uint64_t last) {
    std::vector<GradedSolution> found;
    std::vector<int> f(k, 0);
    for (std::uint64_t mask = first; mask < last; ++mask) {
      for (std::size_t i = 0; i < k; ++i)
        f[i] = (mask >> i) & 1 ? -1 : 0;

      bool ok = true;
      for (const auto& row : value_rows) {
        // f(s) (1 + f(m) + f(n)) = f(m) f(n)
        if (f[row.s_slot] * (1 + f[row.m_slot] + f[row.n_slot]) !=
            f[row.m_slot] * f[row.n_slot]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      // f(0)(1 + f(m) + f(-m)) = f(m) f(-m): pins f(0) to 0 when both
      // values vanish, to -1 when both are -1, vacuous on mixed pairs.
      bool needs_zero = false, needs_minus_one = false;
      for (const auto& [i, j] : zero_sum_rows) {
        if (f[i] == 0 && f[j] == 0) needs_zero = true;
        if (f[i] == -1 && f[j] == -1) needs_minus_one = true;
      }
      if (needs_zero && needs_minus_one) continue;

      GradedSolution solution;
      for (std::size_t i = 0; i < k; ++i)
        solution.f_values[indices[i]] = f[i];
      if (needs_zero)
        solution.f0 = {F0Constraint::Kind::equals, Rational(0)};
      else if (needs_minus_one)
        solution.f0 = {F0Constraint::Kind::equals, Rational(-1)};
      else
        solution.f0 = {F0Constraint::Kind::free, Rational(0)};
      found.push_back(std::move(solution));
    }
    return found;
  };

  // Contiguous mask ranges per worker, results concatenated in range
  // order: the report is identical for any worker count.
  std::vector<GradedSolution> solutions;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (total < (1u << 16) || workers <= 1) {
    solutions = scan_range(0, total);
  } else {
    const std::uint64_t per = (total + workers - 1) / workers;
    std::vector<std::future<std::vector<GradedSolution>>> futures;
    for (unsigned shard = 0; shard < workers; ++shard) {
      const std::uint64_t first = shard * per;
      if (first >= total) break;
      const std::uint64_t last = std::min(total, first + per);
      futures.push_back(std::async(std::launch::async, scan_range, first,
                                   last));
    }
    for (auto& fut : futures) {
      auto part = fut.get();
      solutions.insert(solutions.end(),
                       std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
  }

  for (auto& solution : solutions) {
    ClassifiedSolution classified;
    try {
      classified.matched = match_catalog(solution, w);
    } catch (const Error& err) {
      if (err.code() != Errc::ambiguous_match) throw;
      classified.matched = err.what();
    }
    classified.data = std::move(solution);
    report.solutions.push_back(std::move(classified));
  }

  report.notes.emplace_back("assignments", std::to_string(total));
  return report;
}

std::string match_catalog(const GradedSolution& solution,
                          const Window& /*window*/) {
  // The solution's value map already carries the full window restriction.
  std::vector<std::string> hits;
  for (auto family : kAllFamilies) {
    const IndexFunction f = family_f(family);
    bool same = true;
    for (const auto& [m, value] : solution.f_values) {
      if (!(f.eval(m) == PolyScalar(value))) {
        same = false;
        break;
      }
    }
    if (!same) continue;
    const F0Kind kind = family_f0_kind(family);
    const F0Constraint& f0 = solution.f0;
    const bool f0_match =
        (kind == F0Kind::free && f0.kind == F0Constraint::Kind::free) ||
        (kind == F0Kind::zero && f0.kind == F0Constraint::Kind::equals &&
         f0.value == 0) ||
        (kind == F0Kind::minus_one && f0.kind == F0Constraint::Kind::equals &&
         f0.value == -1);
    if (f0_match) hits.push_back(family_name(family));
  }
  if (hits.empty()) return "unmatched";
  if (hits.size() == 1) return hits.front();
  std::string joined;
  for (const auto& h : hits) {
    if (!joined.empty()) joined += "|";
    joined += h;
  }
  raise(Errc::ambiguous_match,
        "families " + joined + " restrict identically to this window");
}

std::vector<std::pair<std::int64_t, PolyScalar>> family_restriction(
    GradedFamily family, const Window& w) {
  const IndexFunction f = family_f(family);
  std::vector<std::pair<std::int64_t, PolyScalar>> out;
  for (std::int64_t m = w.lo; m <= w.hi; ++m) out.emplace_back(m, f.eval(m));
  return out;
}

namespace {

std::map<std::int64_t, Rational> normalize_direction(
    const std::map<std::int64_t, Rational>& gamma) {
  std::map<std::int64_t, Rational> out;
  Rational lead(0);
  for (const auto& [m, v] : gamma) {
    if (v != 0) {
      lead = v;
      break;
    }
  }
  if (lead == 0) return out;
  for (const auto& [m, v] : gamma) {
    if (v != 0) out[m] = v / lead;
  }
  return out;
}

/// Catalog tail direction restricted to the window and normalized, with
/// b = 1; empty when the support misses the window entirely.
std::map<std::int64_t, Rational> catalog_tail_direction(
    const std::string& name, std::int64_t nu, const Window& w) {
  const CatalogEntry entry = catalog_lookup(name, nu);
  const auto& shifting = std::get<ShiftingSpec>(entry.spec);
  std::map<std::int64_t, Rational> gamma;
  const std::map<Param, Rational> at_b1 = {{Param::b, Rational(1)}};
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    const PolyScalar& value = shifting.g.eval(m);
    if (!value.is_zero()) gamma[m] = value.evaluate(at_b1);
  }
  return normalize_direction(gamma);
}

struct ShiftingSystem {
  std::vector<std::int64_t> unknowns;  // g(m) for m in window, ascending
  IntMatrix matrix;
};

ShiftingSystem build_shifting_system(const IndexFunction& f, std::int64_t nu,
                                     const Window& w) {
  std::vector<std::int64_t> unknowns;
  for (std::int64_t m = w.lo; m <= w.hi; ++m) unknowns.push_back(m);
  auto slot = [&](std::int64_t m) { return std::size_t(m - w.lo); };

  auto f_at = [&](std::int64_t m) -> Rational {
    const PolyScalar& v = f.eval(m);
    if (!v.is_constant())
      raise(Errc::invalid_argument,
            "the classifier needs a fully pinned family function");
    return v.constant_value();
  };

  std::vector<std::vector<Rational>> rows;
  std::size_t pairs_seen = 0;
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = m + 1; n <= w.hi; ++n) {
      if (!w.contains(m + n) || !w.contains(m + n + nu)) continue;
      ++pairs_seen;
      std::vector<Rational> row(unknowns.size(), Rational(0));
      row[slot(m + n)] += Rational(m - n) * (f_at(m) + f_at(n) + 1);
      row[slot(n)] -= Rational(n - m + nu) * (f_at(m + n + nu) - f_at(m));
      row[slot(m)] -= Rational(n - m - nu) * (f_at(m + n + nu) - f_at(n));
      if (std::any_of(row.begin(), row.end(),
                      [](const Rational& x) { return x != 0; }))
        rows.push_back(std::move(row));
    }
  }
  if (pairs_seen == 0)
    raise(Errc::window_too_small,
          "no index pair satisfies the equation conditions on " + w.render());

  IntMatrix matrix(rows.size(), unknowns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    // Entries are integral already; clear denominators defensively.
    BigInt lcm(1);
    for (const auto& q : rows[r]) {
      const BigInt den = denominator(q);
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      matrix.at(r, c) = numerator(rows[r][c] * Rational(lcm));
  }
  return {std::move(unknowns), std::move(matrix)};
}

bool passes_quadratic(const std::map<std::int64_t, Rational>& gamma,
                      std::int64_t nu, const Window& w) {
  auto at = [&](std::int64_t m) -> Rational {
    auto it = gamma.find(m);
    return it == gamma.end() ? Rational(0) : it->second;
  };
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = m + 1; n <= w.hi; ++n) {
      if (!w.contains(m + n + nu)) continue;
      const Rational lhs = Rational(m - n) * at(m) * at(n);
      const Rational rhs =
          (Rational(m - n + nu) * at(m) + Rational(m - n - nu) * at(n)) *
          at(m + n + nu);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

ClassificationReport classify_shifting(GradedFamily family, std::int64_t nu,
                                       const Window& w) {
  if (nu == 0) raise(Errc::nu_zero, "classification requires nu != 0");

  std::vector<std::optional<Rational>> f0_probes;
  if (family_f0_kind(family) == F0Kind::free) {
    f0_probes.push_back(Rational(-1));
    f0_probes.push_back(Rational(0));
  } else {
    f0_probes.push_back(std::nullopt);
  }

  ClassificationReport report;
  report.mode = "shifting";
  report.window = w;
  report.notes.emplace_back("family", family_name(family));
  report.notes.emplace_back("nu", std::to_string(nu));

  for (const auto& f0 : f0_probes) {
    const IndexFunction f =
        f0 ? family_f_at(family, *f0) : family_f(family);
    const ShiftingSystem system = build_shifting_system(f, nu, w);
    const NullspaceResult ns = nullspace(system.matrix);
    const int dim = static_cast<int>(ns.basis.size());

    std::vector<std::map<std::int64_t, Rational>> candidates;
    auto add_candidate = [&](const std::vector<Rational>& v) {
      std::map<std::int64_t, Rational> gamma;
      for (std::size_t i = 0; i < system.unknowns.size(); ++i) {
        if (v[i] != 0) gamma[system.unknowns[i]] = v[i];
      }
      auto normalized = normalize_direction(gamma);
      if (normalized.empty()) return;
      if (std::none_of(candidates.begin(), candidates.end(),
                       [&](const auto& g) { return g == normalized; }))
        candidates.push_back(std::move(normalized));
    };

    for (const auto& v : ns.basis) add_candidate(v);
    if (dim >= 2) {
      report.needs_review = true;
      static const int kCombo[] = {-2, -1, 1, 2};
      for (std::size_t i = 0; i < ns.basis.size(); ++i) {
        for (std::size_t j = i + 1; j < ns.basis.size(); ++j) {
          for (int ci : kCombo) {
            for (int cj : kCombo) {
              std::vector<Rational> v(system.unknowns.size(), Rational(0));
              for (std::size_t s = 0; s < v.size(); ++s)
                v[s] = Rational(ci) * ns.basis[i][s] +
                       Rational(cj) * ns.basis[j][s];
              add_candidate(v);
            }
          }
        }
      }
    }

    std::vector<ShiftingRay> rays;
    for (const auto& gamma : candidates) {
      if (!passes_quadratic(gamma, nu, w)) continue;
      ShiftingRay ray;
      ray.family = family;
      ray.f0 = f0;
      ray.nu = nu;
      ray.gamma = gamma;
      ray.nullspace_dim = dim;
      rays.push_back(std::move(ray));
    }
    std::sort(rays.begin(), rays.end(),
              [](const ShiftingRay& x, const ShiftingRay& y) {
                return gamma_render(x.gamma) < gamma_render(y.gamma);
              });
    for (auto& ray : rays) {
      ClassifiedSolution classified;
      classified.matched = match_catalog(ray, w);
      classified.data = std::move(ray);
      report.solutions.push_back(std::move(classified));
    }
    report.notes.emplace_back(
        "nullspace_dim" + (f0 ? "_f0=" + rational_str(*f0) : std::string()),
        std::to_string(dim));
  }
  return report;
}

std::string match_catalog(const ShiftingRay& ray, const Window& w) {
  for (const auto& name : catalog_shifting_names()) {
    const auto& admissible = catalog_admissible_nu(name);
    if (std::find(admissible.begin(), admissible.end(), ray.nu) ==
        admissible.end())
      continue;
    const CatalogEntry entry = catalog_lookup(name, ray.nu);
    const auto& shifting = std::get<ShiftingSpec>(entry.spec);
    // Family function must agree: either pinned f0 (probed families) or
    // the family-fixed one.
    const IndexFunction ray_f = ray.f0
                                    ? family_f_at(ray.family, *ray.f0)
                                    : family_f(ray.family);
    if (!(shifting.f == ray_f)) continue;
    if (catalog_tail_direction(name, ray.nu, w) == ray.gamma) return name;
  }
  return "unmatched";
}

}  // namespace postwitt
