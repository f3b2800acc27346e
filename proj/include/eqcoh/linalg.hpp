#pragma once

#include <optional>
#include <vector>

#include "eqcoh/scalar.hpp"

namespace eqcoh {

/// Dense matrix over the Gaussian rationals.  The blocks extracted from
/// the graded bases are small enough that dense exact storage wins over
/// sparse bookkeeping.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Matrix identity(int n);
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
};

/// Rank via fraction-free Bareiss elimination: rows are scaled to Gaussian
/// integers first, so all intermediate divisions are exact in Z[i].
int rank_bareiss(Matrix m);

/// Plain Gauss-Jordan over the field; used for kernels and solves and as
/// the independent route against rank_bareiss.
int rank_field(Matrix m);

/// Basis of the right null space, reduced-echelon free-variable vectors.
std::vector<std::vector<Scalar>> kernel(const Matrix& m);

/// Solves A x = b exactly; std::nullopt when inconsistent.  When the
/// solution is not unique the free variables are set to zero.
std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b);

}  // namespace eqcoh
