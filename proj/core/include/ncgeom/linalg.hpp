#pragma once

// Dense exact linear algebra over any of the library's coefficient fields.
// The same Gaussian elimination serves Q(i) matrices (representations,
// commutant computations) and rational-function matrices (metrics,
// curvature), so FieldOps abstracts the two: every operation only needs
// zero/one "like" an existing element, exact division, and a zero test.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncgeom/errors.hpp"
#include "ncgeom/number.hpp"
#include "ncgeom/rational_function.hpp"

namespace ncgeom {

template <class F>
struct FieldOps;

template <>
struct FieldOps<GaussianRational> {
  static GaussianRational zero(const GaussianRational&) { return GaussianRational(0); }
  static GaussianRational one(const GaussianRational&) { return GaussianRational(1); }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
};

template <>
struct FieldOps<RationalFunction> {
  static RationalFunction zero(const RationalFunction& like) {
    return RationalFunction::zero(like.nvars());
  }
  static RationalFunction one(const RationalFunction& like) {
    return RationalFunction::one(like.nvars());
  }
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
  static RationalFunction conj(const RationalFunction& x) { return x.conj(); }
};

template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), exemplar_(fill), data_(rows * cols, fill) {}

  static Matrix zeros(std::size_t rows, std::size_t cols, const F& like) {
    return Matrix(rows, cols, FieldOps<F>::zero(like));
  }
  static Matrix identity(std::size_t n, const F& like) {
    Matrix m = zeros(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldOps<F>::one(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& exemplar() const { return exemplar_; }

  F& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return data_[i * cols_ + j];
  }
  const F& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return data_[i * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const F& x : data_) {
      if (!FieldOps<F>::is_zero(x)) return false;
    }
    return true;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (F& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out = zeros(a.rows_, b.cols_, a.exemplar_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (FieldOps<F>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out.at(i, j) += aik * b.at(k, j);
        }
      }
    }
    return out;
  }

  Matrix& scale(const F& c) {
    for (F& x : data_) x = x * c;
    return *this;
  }

  Matrix transpose() const {
    Matrix out = zeros(cols_, rows_, exemplar_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
  }

  Matrix conj_transpose() const {
    Matrix out = transpose();
    for (F& x : out.data_) x = FieldOps<F>::conj(x);
    return out;
  }

  F trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of nonsquare matrix");
    F acc = FieldOps<F>::zero(exemplar_);
    for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch("matrix shape mismatch");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  F exemplar_;
  std::vector<F> data_;
};

// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && FieldOps<F>::is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    F inv = FieldOps<F>::one(m.exemplar());
    inv = inv / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || FieldOps<F>::is_zero(m.at(i, col))) continue;
      F factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of nonsquare matrix");
  F det = FieldOps<F>::one(m.exemplar());
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows() && FieldOps<F>::is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) return FieldOps<F>::zero(m.exemplar());
    if (pivot != col) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det = det * m.at(col, col);
    F inv = FieldOps<F>::one(m.exemplar()) / m.at(col, col);
    for (std::size_t i = col + 1; i < m.rows(); ++i) {
      if (FieldOps<F>::is_zero(m.at(i, col))) continue;
      F factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(col, j);
      }
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of nonsquare matrix");
  std::size_t n = m.rows();
  Matrix<F> aug = Matrix<F>::zeros(n, 2 * n, m.exemplar());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = FieldOps<F>::one(m.exemplar());
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
  Matrix<F> out = Matrix<F>::zeros(n, n, m.exemplar());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

// Columns spanning the kernel of m, read off the rref in the standard way.
template <class F>
std::vector<Matrix<F>> nullspace(Matrix<F> m) {
  std::size_t n = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Matrix<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Matrix<F> v = Matrix<F>::zeros(n, 1, m.exemplar());
    v.at(free, 0) = FieldOps<F>::one(m.exemplar());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v.at(pivots[r], 0) = -m.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
struct SolveResult {
  bool consistent;
  Matrix<F> particular;               // rows()x1, valid when consistent
  std::vector<Matrix<F>> kernel;      // homogeneous solutions
};

// Solves A x = b exactly.
template <class F>
SolveResult<F> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) {
    throw DimensionMismatch("solve expects a column vector of matching height");
  }
  Matrix<F> aug = Matrix<F>::zeros(a.rows(), a.cols() + 1, a.exemplar());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b.at(i, 0);
  }
  auto pivots = rref(aug);
  SolveResult<F> out{true, Matrix<F>::zeros(a.cols(), 1, a.exemplar()), {}};
  if (!pivots.empty() && pivots.back() == a.cols()) {
    out.consistent = false;
    return out;
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    out.particular.at(pivots[r], 0) = aug.at(r, a.cols());
  }
  Matrix<F> homog = Matrix<F>::zeros(a.rows(), a.cols(), a.exemplar());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) homog.at(i, j) = a.at(i, j);
  }
  out.kernel = nullspace(std::move(homog));
  return out;
}

// Convenience builder for tests and tables.
template <class F>
Matrix<F> matrix_from_rows(const std::vector<std::vector<F>>& rows) {
  if (rows.empty() || rows[0].empty()) throw DimensionMismatch("matrix needs entries");
  Matrix<F> m(rows.size(), rows[0].size(), rows[0][0]);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace ncgeom
