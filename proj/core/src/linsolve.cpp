#include "postwitt/linsolve.hpp"

#include <algorithm>
#include <cassert>

namespace postwitt {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

NullspaceResult nullspace(IntMatrix m) {
  struct Pivot {
    std::size_t row, col;
  };
  std::vector<Pivot> pivots;
  BigInt prev_pivot(1);
  std::size_t next_row = 0;

  for (std::size_t col = 0; col < m.cols && next_row < m.rows; ++col) {
    // Smallest nonzero magnitude keeps the fraction-free intermediates small.
    std::size_t best = m.rows;
    for (std::size_t r = next_row; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      if (best == m.rows ||
          abs_big(m.at(r, col)) < abs_big(m.at(best, col)))
        best = r;
    }
    if (best == m.rows) continue;  // free column
    if (best != next_row) {
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(best, j), m.at(next_row, j));
    }
    const std::size_t piv = next_row;
    for (std::size_t r = piv + 1; r < m.rows; ++r) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        BigInt value = m.at(piv, col) * m.at(r, j) - m.at(r, col) * m.at(piv, j);
        // Bareiss: division by the previous pivot is exact over Z.
        value /= prev_pivot;
        m.at(r, j) = std::move(value);
      }
      m.at(r, col) = 0;
    }
    prev_pivot = m.at(piv, col);
    pivots.push_back({piv, col});
    ++next_row;
  }

  std::vector<bool> is_pivot_col(m.cols, false);
  for (const auto& p : pivots) is_pivot_col[p.col] = true;

  NullspaceResult result;
  result.rank = pivots.size();
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_pivot_col[fc]) continue;
    std::vector<Rational> v(m.cols, Rational(0));
    v[fc] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      Rational sum(0);
      for (std::size_t j = it->col + 1; j < m.cols; ++j) {
        if (v[j] != 0) sum += Rational(m.at(it->row, j)) * v[j];
      }
      v[it->col] = -sum / Rational(m.at(it->row, it->col));
    }
    result.basis.push_back(std::move(v));
  }
  return result;
}

}  // namespace postwitt
