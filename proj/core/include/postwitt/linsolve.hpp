#pragma once

#include <vector>

#include "postwitt/rational.hpp"

namespace postwitt {

/// Dense exact matrix over arbitrary-precision integers, rows x cols.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), data(r * c, BigInt(0)) {}
  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

struct NullspaceResult {
  /// One basis vector per free column, in ascending free-column order;
  /// each has its pivot entries back-solved exactly.
  std::vector<std::vector<Rational>> basis;
  std::size_t rank = 0;
};

/// Exact nullspace of an integer matrix. Forward elimination is
/// fraction-free (Bareiss), pivot rows chosen by smallest nonzero |entry|;
/// free variables get the standard basis, pivot variables are back-solved
/// over rationals.
NullspaceResult nullspace(IntMatrix matrix);

}  // namespace postwitt
