#include "eqcoh/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace eqcoh {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  Matrix out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j)
        out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const Scalar& v : a)
    if (!v.is_zero()) return false;
  return true;
}

int rank_bareiss(Matrix m) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  // Scale each row to Gaussian integers.
  for (int r = 0; r < m.rows; ++r) {
    Int mult = 1;
    for (int c = 0; c < m.cols; ++c) {
      const Scalar& v = m.at(r, c);
      mult = lcm(mult, denominator(v.re));
      mult = lcm(mult, denominator(v.im));
    }
    if (mult != 1) {
      Scalar s = Scalar(Rational(mult));
      for (int c = 0; c < m.cols; ++c) m.at(r, c) *= s;
    }
  }
  int rank = 0;
  Scalar prev(1);
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    const Scalar p = m.at(rank, col);
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = col + 1; c < m.cols; ++c)
        m.at(r, c) = (p * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
      m.at(r, col) = Scalar(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(row, c));
    Scalar inv = m.at(row, col).inv();
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_field(Matrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel(const Matrix& m0) {
  Matrix m = m0;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols);
    v[free] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(static_cast<int>(r), free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                         const std::vector<Scalar>& b) {
  Matrix aug(a.rows, a.cols + 1);
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == a.cols) return std::nullopt;  // pivot in the rhs column
  std::vector<Scalar> x(a.cols);
  for (size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
  return x;
}

}  // namespace eqcoh
