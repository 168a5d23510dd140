#ifndef RECOMB_LINALG_HNF_HPP
#define RECOMB_LINALG_HNF_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "recomb/linalg/dense_matrix.hpp"

namespace recomb {

struct HnfResult {
  IntegerMatrix H;                  // Hermite normal form, U * M = H
  IntegerMatrix U;                  // unimodular transform (empty when not requested)
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // j_1 < ... < j_r
  int det_sign = 1;                 // det U, tracked through the elementary steps
};

/// Integer vectors spanning an integer lattice, linearly independent over Q.
struct LatticeBasis {
  std::size_t dimension = 0;
  std::vector<IntVector> rows;

  std::size_t size() const { return rows.size(); }
};

namespace detail {

// q = round(a / b), ties away from zero is fine for size reduction
inline mpz_class rounded_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_class twice = 2 * a + b;
  mpz_class den = 2 * b;
  if (den < 0) {
    twice = -twice;
    den = -den;
  }
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
  return q;
}

// row -= q * src over [from, size)
inline void submul_row(IntVector& row, const IntVector& src, const mpz_class& q, std::size_t from = 0) {
  for (std::size_t k = from; k < row.size(); ++k) {
    if (src[k] != 0) mpz_submul(row[k].get_mpz_t(), q.get_mpz_t(), src[k].get_mpz_t());
  }
}

}  // namespace detail

/// Row Hermite normal form of M with a unimodular transform U (U * M = H).
/// Euclidean elimination uses the smallest available pivot and rounded
/// quotients; entries above each pivot are reduced as soon as it is found.
inline HnfResult hnf_with_transform(const IntegerMatrix& m, bool want_transform = true) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t width = cols + (want_transform ? rows : 0);
  std::vector<IntVector> a(rows, IntVector(width, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
    if (want_transform) a[i][cols + i] = 1;
  }
  HnfResult res;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        if (best == rows || abs(a[i][j]) < abs(a[best][j])) best = i;
      }
      if (best == rows) break;
      if (best != r) {
        std::swap(a[best], a[r]);
        res.det_sign = -res.det_sign;
      }
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        const mpz_class q = detail::rounded_quotient(a[i][j], a[r][j]);
        detail::submul_row(a[i], a[r], q, j);
        if (a[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows || a[r][j] == 0) continue;
    if (a[r][j] < 0) {
      for (auto& x : a[r]) x = -x;
      res.det_sign = -res.det_sign;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
      if (q != 0) detail::submul_row(a[i], a[r], q, j);
    }
    res.pivots.push_back(j);
    ++r;
  }
  res.rank = r;
  res.H = IntegerMatrix(rows, cols);
  if (want_transform) res.U = IntegerMatrix(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) res.H(i, j) = a[i][j];
    if (want_transform)
      for (std::size_t j = 0; j < rows; ++j) res.U(i, j) = a[i][cols + j];
  }
  return res;
}

inline IntegerMatrix hermite_form(const IntegerMatrix& m) { return hnf_with_transform(m, false).H; }

inline IntegerMatrix rows_to_matrix(const std::vector<IntVector>& rows, std::size_t dimension) {
  return IntegerMatrix::from_rows(rows, dimension);
}

/// Nonzero rows of the HNF of the row span.
inline IntegerMatrix lattice_hnf(const std::vector<IntVector>& rows, std::size_t dimension) {
  auto h = hnf_with_transform(rows_to_matrix(rows, dimension), false);
  return h.H.row_block(0, h.rank);
}

/// Basis of {x in Z^n : M x = 0}: the last n - r rows of a transform U with
/// U M^t = H.
inline LatticeBasis nullspace_lattice(const IntegerMatrix& m) {
  const auto h = hnf_with_transform(m.transpose());
  LatticeBasis b;
  b.dimension = m.cols();
  for (std::size_t i = h.rank; i < h.U.rows(); ++i) b.rows.push_back(h.U.row_vector(i));
  return b;
}

/// Whether v is an integer combination of the rows of a lattice HNF.
inline bool lattice_contains(const IntegerMatrix& hnf_rows, IntVector v) {
  for (std::size_t i = 0; i < hnf_rows.rows(); ++i) {
    auto row = hnf_rows.row(i);
    std::size_t j = 0;
    while (j < row.size() && row[j] == 0) ++j;
    if (j == row.size()) continue;
    for (std::size_t k = 0; k < j; ++k)
      if (v[k] != 0) return false;
    if (v[j] == 0) continue;
    if (!mpz_divisible_p(v[j].get_mpz_t(), row[j].get_mpz_t())) return false;
    const mpz_class q = v[j] / row[j];
    for (std::size_t k = j; k < v.size(); ++k) v[k] -= q * row[k];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b, std::size_t dimension) {
  return lattice_hnf(a, dimension) == lattice_hnf(b, dimension);
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline mpz_class bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace recomb

#endif  // RECOMB_LINALG_HNF_HPP
