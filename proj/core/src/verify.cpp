#include "postwitt/verify.hpp"

#include <functional>
#include <future>
#include <mutex>
#include <thread>

#include "postwitt/module_action.hpp"

namespace postwitt {

std::string Residual::value_render() const {
  if (const auto* poly = std::get_if<PolyScalar>(&value)) return poly->render();
  return std::get<WittElement>(value).render();
}

namespace {

struct Collector {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<Residual> residuals;

  void count_pass() { ++checked; }

  template <typename Value>
  void record(const std::string& identity, std::vector<std::int64_t> indices,
              Value value) {
    ++checked;
    ++failures;
    residuals.push_back(Residual{identity, std::move(indices),
                                 std::variant<PolyScalar, WittElement>(
                                     std::move(value))});
  }

  void check(const std::string& identity, std::vector<std::int64_t> indices,
             const WittElement& residual) {
    if (residual.is_zero()) {
      count_pass();
    } else {
      record(identity, std::move(indices), residual);
    }
  }

  void check(const std::string& identity, std::vector<std::int64_t> indices,
             const PolyScalar& residual) {
    if (residual.is_zero()) {
      count_pass();
    } else {
      record(identity, std::move(indices), residual);
    }
  }
};

unsigned pick_threads(unsigned requested, std::int64_t span,
                      std::uint64_t work) {
  if (requested != 0) return std::max(1u, requested);
  if (work < 4096) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<unsigned>(
      std::min<std::int64_t>(hw, std::max<std::int64_t>(1, span)));
}

/// Runs `body(m, collector)` for every m in the window, sharded over
/// contiguous m-ranges. Shard results are concatenated in shard order, so
/// the merged report is identical for any thread count.
Collector sweep(const Window& w, unsigned threads, std::uint64_t work_estimate,
                const std::function<void(std::int64_t, Collector&)>& body) {
  const unsigned n = pick_threads(threads, w.size(), work_estimate);
  if (n <= 1) {
    Collector all;
    for (std::int64_t m = w.lo; m <= w.hi; ++m) body(m, all);
    return all;
  }
  const std::int64_t span = w.size();
  const std::int64_t per = (span + n - 1) / n;
  std::vector<std::future<Collector>> futures;
  for (unsigned shard = 0; shard < n; ++shard) {
    const std::int64_t lo = w.lo + shard * per;
    const std::int64_t hi = std::min<std::int64_t>(w.hi, lo + per - 1);
    if (lo > w.hi) break;
    futures.push_back(std::async(std::launch::async, [lo, hi, &body] {
      Collector part;
      for (std::int64_t m = lo; m <= hi; ++m) body(m, part);
      return part;
    }));
  }
  Collector all;
  for (auto& fut : futures) {
    Collector part = fut.get();
    all.checked += part.checked;
    all.failures += part.failures;
    all.residuals.insert(all.residuals.end(),
                         std::make_move_iterator(part.residuals.begin()),
                         std::make_move_iterator(part.residuals.end()));
  }
  return all;
}

VerifyReport finish(std::string identity, const Window& w, Collector all) {
  VerifyReport report;
  report.identity = std::move(identity);
  report.window = w;
  report.total_checked = all.checked;
  report.failure_count = all.failures;
  if (all.residuals.size() > kMaxResidualWitnesses)
    all.residuals.resize(kMaxResidualWitnesses);
  report.residuals = std::move(all.residuals);
  report.passed = (report.failure_count == 0);
  return report;
}

}  // namespace

VerifyReport check_postlie_def11(const PostLieSpec& spec, const Window& w,
                                 unsigned threads) {
  const std::uint64_t work = std::uint64_t(w.size()) * w.size() * w.size();
  Collector all =
      sweep(w, threads, work, [&](std::int64_t m, Collector& col) {
        const WittElement x = WittElement::basis(m);
        for (std::int64_t n = w.lo; n <= w.hi; ++n) {
          const WittElement y = WittElement::basis(n);
          const WittElement xy = circ(spec, x, y);
          const WittElement yx = circ(spec, y, x);
          const WittElement sym = xy - yx;           // <x,y>
          const WittElement lie_xy = bracket(x, y);  // [x,y]
          for (std::int64_t p = w.lo; p <= w.hi; ++p) {
            const WittElement z = WittElement::basis(p);
            // [x,y] o z - x o (y o z) + y o (x o z) + <x,y> o z
            WittElement r1 = circ(spec, lie_xy, z);
            r1 -= circ(spec, x, circ(spec, y, z));
            r1 += circ(spec, y, circ(spec, x, z));
            r1 += circ(spec, sym, z);
            col.check("def11_eq1", {m, n, p}, r1);
            // x o [y,z] - [x o y, z] - [y, x o z]
            WittElement r2 = circ(spec, x, bracket(y, z));
            r2 -= bracket(xy, z);
            r2 -= bracket(y, circ(spec, x, z));
            col.check("def11_eq2", {m, n, p}, r2);
          }
        }
      });
  return finish("postlie_def11", w, std::move(all));
}

VerifyReport check_postlie_def43(const PostLieSpec& spec, const Window& w,
                                 BracketSlot slot, unsigned threads) {
  auto lie = [&spec, slot](const WittElement& u, const WittElement& v) {
    return slot == BracketSlot::witt ? bracket(u, v)
                                     : induced_bracket(spec, u, v);
  };
  const std::uint64_t work = std::uint64_t(w.size()) * w.size() * w.size();
  Collector all =
      sweep(w, threads, work, [&](std::int64_t m, Collector& col) {
        const WittElement x = WittElement::basis(m);
        for (std::int64_t n = w.lo; n <= w.hi; ++n) {
          const WittElement y = WittElement::basis(n);
          const WittElement xy = circ(spec, x, y);
          for (std::int64_t p = w.lo; p <= w.hi; ++p) {
            const WittElement z = WittElement::basis(p);
            // {x,y} o z - x o (y o z) + y o (x o z)
            WittElement r7 = circ(spec, lie(x, y), z);
            r7 -= circ(spec, x, circ(spec, y, z));
            r7 += circ(spec, y, circ(spec, x, z));
            col.check("def43_eq7", {m, n, p}, r7);
            // x o {y,z} - {x o y, z} - {y, x o z}
            //   - x o <y,z> + <x o y, z> + <y, x o z>
            const WittElement xz = circ(spec, x, z);
            const WittElement yz = circ(spec, y, z);
            const WittElement zy = circ(spec, z, y);
            WittElement r8 = circ(spec, x, lie(y, z));
            r8 -= lie(xy, z);
            r8 -= lie(y, xz);
            r8 -= circ(spec, x, yz - zy);
            r8 += circ(spec, xy, z) - circ(spec, z, xy);
            r8 += circ(spec, y, xz) - circ(spec, xz, y);
            col.check("def43_eq8", {m, n, p}, r8);
          }
        }
      });
  return finish("postlie_def43", w, std::move(all));
}

VerifyReport check_equivalence(const PostLieSpec& spec, const Window& w,
                               unsigned threads) {
  const std::uint64_t work = std::uint64_t(w.size()) * w.size() * w.size();
  bool def11_ok = true;
  bool def43_ok = true;
  std::mutex flags_mutex;
  Collector all = sweep(w, threads, work, [&](std::int64_t m, Collector& col) {
    bool local_def11_ok = true;
    bool local_def43_ok = true;
    const WittElement x = WittElement::basis(m);
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      const WittElement y = WittElement::basis(n);
      const WittElement xy = circ(spec, x, y);
      const WittElement yx = circ(spec, y, x);
      const WittElement sym = xy - yx;
      const WittElement lie_xy = bracket(x, y);
      const WittElement ind_xy = induced_bracket(spec, x, y);
      // {x,y} - <x,y> must recover the Witt bracket.
      col.check("bracket_roundtrip", {m, n}, (ind_xy - sym) - lie_xy);
      for (std::int64_t p = w.lo; p <= w.hi; ++p) {
        const WittElement z = WittElement::basis(p);
        WittElement r1 = circ(spec, lie_xy, z);
        r1 -= circ(spec, x, circ(spec, y, z));
        r1 += circ(spec, y, circ(spec, x, z));
        r1 += circ(spec, sym, z);
        WittElement r7 = circ(spec, ind_xy, z);
        r7 -= circ(spec, x, circ(spec, y, z));
        r7 += circ(spec, y, circ(spec, x, z));
        if (!r1.is_zero()) local_def11_ok = false;
        if (!r7.is_zero()) local_def43_ok = false;
        col.check("eq1_vs_eq7", {m, n, p}, r1 - r7);

        const WittElement xz = circ(spec, x, z);
        const WittElement yz = circ(spec, y, z);
        const WittElement zy = circ(spec, z, y);
        WittElement r2 = circ(spec, x, bracket(y, z));
        r2 -= bracket(xy, z);
        r2 -= bracket(y, xz);
        WittElement r8 = circ(spec, x, induced_bracket(spec, y, z));
        r8 -= induced_bracket(spec, xy, z);
        r8 -= induced_bracket(spec, y, xz);
        r8 -= circ(spec, x, yz - zy);
        r8 += circ(spec, xy, z) - circ(spec, z, xy);
        r8 += circ(spec, y, xz) - circ(spec, xz, y);
        if (!r2.is_zero()) local_def11_ok = false;
        if (!r8.is_zero()) local_def43_ok = false;
        col.check("eq2_vs_eq8", {m, n, p}, r2 - r8);
      }
    }
    if (!local_def11_ok || !local_def43_ok) {
      std::lock_guard<std::mutex> lock(flags_mutex);
      def11_ok = def11_ok && local_def11_ok;
      def43_ok = def43_ok && local_def43_ok;
    }
  });
  VerifyReport report = finish("definition_equivalence", w, std::move(all));
  report.notes.emplace_back("def11_passed", def11_ok ? "true" : "false");
  report.notes.emplace_back("def43_induced_passed",
                            def43_ok ? "true" : "false");
  return report;
}

VerifyReport check_jacobi(const PostLieSpec& spec, const Window& w,
                          unsigned threads) {
  const std::uint64_t work = std::uint64_t(w.size()) * w.size() * w.size();
  Collector all =
      sweep(w, threads, work, [&](std::int64_t m, Collector& col) {
        const WittElement x = WittElement::basis(m);
        for (std::int64_t n = w.lo; n <= w.hi; ++n) {
          const WittElement y = WittElement::basis(n);
          const WittElement ind_xy = induced_bracket(spec, x, y);
          for (std::int64_t p = w.lo; p <= w.hi; ++p) {
            const WittElement z = WittElement::basis(p);
            WittElement r = induced_bracket(spec, x, induced_bracket(spec, y, z));
            r += induced_bracket(spec, y, induced_bracket(spec, z, x));
            r += induced_bracket(spec, z, ind_xy);
            col.check("jacobi_induced", {m, n, p}, r);
          }
        }
      });
  return finish("jacobi_induced", w, std::move(all));
}

namespace {

PolyScalar graded_eq_residual(const IndexFunction& f, std::int64_t m,
                              std::int64_t n) {
  const PolyScalar fm = f.eval(m);
  const PolyScalar fn = f.eval(n);
  const PolyScalar fs = f.eval(m + n);
  PolyScalar inner = fs + fm * fs + fn * fs - fm * fn;
  return Rational(m - n) * inner;
}

void graded_feq_into(const IndexFunction& f, const Window& w, Collector& col,
                     const std::string& eq_id) {
  const PolyScalar zero(0), minus_one(-1);
  // Pairs are drawn from the window; f is total, so the equation is
  // evaluated wherever the index sum lands (no truncation).
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = w.lo; n <= w.hi; ++n) {
      col.check(eq_id, {m, n}, graded_eq_residual(f, m, n));
    }
  }
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    if (m == 0) continue;
    const PolyScalar& v = f.eval(m);
    // Membership in {0, -1} is literal; the residual v(v+1) vanishes
    // exactly on those two values.
    col.check("index_sets_i", {m}, v * (v + PolyScalar(1)));
  }
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = m + 1; n <= w.hi; ++n) {
      const std::int64_t s = m + n;
      if (m == 0 || n == 0 || s == 0) continue;
      const PolyScalar& fm = f.eval(m);
      const PolyScalar& fn = f.eval(n);
      const PolyScalar& fs = f.eval(s);
      if (fm == zero && fn == zero && !(fs == zero)) {
        col.check("index_sets_ii", {m, n}, fs);
      } else if (fm == minus_one && fn == minus_one && !(fs == minus_one)) {
        col.check("index_sets_ii", {m, n}, fs + PolyScalar(1));
      } else {
        col.count_pass();
      }
    }
  }
}

}  // namespace

VerifyReport check_graded_feq(const IndexFunction& f, const Window& w) {
  Collector all;
  graded_feq_into(f, w, all, "graded_feq");
  return finish("graded_feq", w, std::move(all));
}

VerifyReport check_shifting_feqs(const IndexFunction& f,
                                 const IndexFunction& g, std::int64_t nu,
                                 const Window& w) {
  if (nu == 0) raise(Errc::nu_zero, "shifting equations require nu != 0");
  Collector all;
  graded_feq_into(f, w, all, "shifting_eq_f");

  // Quadratic equation on g alone.
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = m + 1; n <= w.hi; ++n) {
      if (!w.contains(m + n + nu)) continue;
      const PolyScalar gm = g.eval(m);
      const PolyScalar gn = g.eval(n);
      const PolyScalar gs = g.eval(m + n + nu);
      PolyScalar residual = Rational(m - n) * (gm * gn);
      residual -= (Rational(m - n + nu) * gm + Rational(m - n - nu) * gn) * gs;
      all.check("shifting_eq_quadratic", {m, n}, residual);
    }
  }

  // Mixed linear equation tying g to f.
  for (std::int64_t m = w.lo; m <= w.hi; ++m) {
    for (std::int64_t n = m + 1; n <= w.hi; ++n) {
      if (!w.contains(m + n) || !w.contains(m + n + nu)) continue;
      const PolyScalar fm = f.eval(m);
      const PolyScalar fn = f.eval(n);
      const PolyScalar fs = f.eval(m + n + nu);
      PolyScalar residual =
          Rational(m - n) * (fm + fn + PolyScalar(1)) * g.eval(m + n);
      residual -= Rational(n - m + nu) * (fs - fm) * g.eval(n);
      residual -= Rational(n - m - nu) * (fs - fn) * g.eval(m);
      all.check("shifting_eq_mixed", {m, n}, residual);
    }
  }

  // Derived consequence: nu g(m) g(-nu) = (m + 2 nu) g(m)^2.
  if (w.contains(-nu)) {
    const PolyScalar gnu = g.eval(-nu);
    for (std::int64_t m = w.lo; m <= w.hi; ++m) {
      const PolyScalar gm = g.eval(m);
      PolyScalar residual = Rational(nu) * gm * gnu;
      residual -= Rational(m + 2 * nu) * gm * gm;
      all.check("shifting_eq_derived", {m}, residual);
    }
  }

  return finish("shifting_feqs", w, std::move(all));
}

VerifyReport check_module(const std::string& name, const Window& w,
                          std::optional<std::int64_t> nu, unsigned threads) {
  const ModuleAction action = module_action(name, nu);
  const PostLieSpec& spec = action.underlying_spec();
  const std::uint64_t work = std::uint64_t(w.size()) * w.size() * w.size();
  Collector all =
      sweep(w, threads, work, [&](std::int64_t m, Collector& col) {
        const WittElement x = WittElement::basis(m);
        for (std::int64_t n = w.lo; n <= w.hi; ++n) {
          const WittElement y = WittElement::basis(n);
          const WittElement lie_xy = induced_bracket(spec, x, y);
          for (std::int64_t p = w.lo; p <= w.hi; ++p) {
            const WittElement v = WittElement::basis(p);
            WittElement r = action.act(lie_xy, v);
            r -= action.act(x, action.act(y, v));
            r += action.act(y, action.act(x, v));
            col.check("module_law", {m, n, p}, r);
          }
        }
      });
  return finish("module_law:" + name, w, std::move(all));
}

}  // namespace postwitt
