#ifndef RECOMB_LINALG_RCF_HPP
#define RECOMB_LINALG_RCF_HPP

#include <cstddef>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "recomb/linalg/dense_matrix.hpp"

namespace recomb {

struct RcfResult {
  RationalMatrix form;              // reduced row echelon form, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Row canonical form over the rationals (Gauss-Jordan).
inline RcfResult rcf(RationalMatrix m) {
  RcfResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && m(piv, j) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    const mpq_class inv = 1 / m(r, j);
    for (std::size_t k = j; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, j) == 0) continue;
      const mpq_class f = m(i, j);
      for (std::size_t k = j; k < cols; ++k) {
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
      }
    }
    res.pivots.push_back(j);
    ++r;
  }
  res.rank = r;
  res.form = std::move(m);
  return res;
}

template <class T>
RcfResult rcf(const DenseMatrix<T>& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        q(i, j) = mpq_class(static_cast<signed long>(m(i, j)));
      } else {
        q(i, j) = mpq_class(m(i, j));
      }
    }
  return rcf(std::move(q));
}

/// Makes an integral primitive vector: scale by the LCM of denominators,
/// divide by the GCD of the entries.
inline IntVector primitive_integer_vector(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

/// Canonical nullspace basis: one vector per free column (free variable set
/// to 1, pivot variables solved), made integral and primitive. Ordered by
/// free column.
inline std::vector<IntVector> rcf_nullspace(const RcfResult& r) {
  const std::size_t cols = r.form.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
    basis.push_back(primitive_integer_vector(v));
  }
  return basis;
}

template <class T>
std::vector<IntVector> rcf_nullspace(const DenseMatrix<T>& m) {
  return rcf_nullspace(rcf(m));
}

}  // namespace recomb

#endif  // RECOMB_LINALG_RCF_HPP
