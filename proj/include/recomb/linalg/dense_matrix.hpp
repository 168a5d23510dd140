#ifndef RECOMB_LINALG_DENSE_MATRIX_HPP
#define RECOMB_LINALG_DENSE_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

namespace recomb {

/// Row-major dense matrix over an exact scalar type.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [first, first + count).
  DenseMatrix row_block(std::size_t first, std::size_t count) const {
    DenseMatrix out(count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
  }

  DenseMatrix select_rows(const std::vector<std::size_t>& which) const {
    DenseMatrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
      std::copy(row(which[i]).begin(), row(which[i]).end(), out.row(i).begin());
    }
    return out;
  }

  template <class U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = DenseMatrix<mpz_class>;
using RationalMatrix = DenseMatrix<mpq_class>;
using IntVector = std::vector<mpz_class>;

template <class T>
DenseMatrix<mpz_class> to_integer_matrix(const DenseMatrix<T>& m) {
  DenseMatrix<mpz_class> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        out(i, j) = mpz_class(static_cast<signed long>(m(i, j)));
      } else {
        out(i, j) = mpz_class(m(i, j));
      }
    }
  return out;
}

inline mpz_class squared_norm(std::span<const mpz_class> v) {
  mpz_class s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

/// Dot product of an integer row with an integer vector.
inline mpz_class dot(std::span<const mpz_class> a, std::span<const mpz_class> b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace recomb

#endif  // RECOMB_LINALG_DENSE_MATRIX_HPP
