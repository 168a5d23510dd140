#ifndef RECOMB_LINALG_LLL_HPP
#define RECOMB_LINALG_LLL_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "recomb/linalg/dense_matrix.hpp"
#include "recomb/linalg/hnf.hpp"

namespace recomb {

class LinearDependenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lovasz constant num/den, 1/4 < delta <= 1.
struct LllParameter {
  long num = 3;
  long den = 4;
};

/// Integral LLL reduction (all Gram-Schmidt data kept as exact integers: the
/// Gram determinants d_i and the scaled coefficients lambda_ij = d_j mu_ij).
/// The output spans the same lattice as the input.
inline LatticeBasis lll_reduce(LatticeBasis basis, LllParameter delta = {}) {
  const std::size_t n = basis.rows.size();
  if (n == 0) return basis;
  for (const auto& r : basis.rows)
    if (r.size() != basis.dimension) throw std::invalid_argument("basis row has wrong length");

  // 1-based bookkeeping, d[0] = 1
  std::vector<IntVector>& b = basis.rows;
  auto row = [&](std::size_t i) -> IntVector& { return b[i - 1]; };
  std::vector<mpz_class> d(n + 1);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1));
  d[0] = 1;
  d[1] = dot(row(1), row(1));
  if (d[1] == 0) throw LinearDependenceError("lattice basis rows are linearly dependent");

  auto reduce = [&](std::size_t k, std::size_t l) {
    mpz_class twice = 2 * lam[k][l];
    if (abs(twice) <= d[l]) return;
    const mpz_class q = detail::rounded_quotient(lam[k][l], d[l]);
    detail::submul_row(row(k), row(l), q);
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  auto swap = [&](std::size_t k, std::size_t kmax) {
    std::swap(row(k), row(k - 1));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const mpz_class l = lam[k][k - 1];
    mpz_class bnew = (d[k - 2] * d[k] + l * l);
    mpz_divexact(bnew.get_mpz_t(), bnew.get_mpz_t(), d[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lam[i][k];
      mpz_class x = d[k] * lam[i][k - 1] - l * t;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d[k - 1].get_mpz_t());
      lam[i][k] = x;
      mpz_class y = bnew * t + l * lam[i][k];
      mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), d[k].get_mpz_t());
      lam[i][k - 1] = y;
    }
    d[k - 1] = bnew;
  };

  std::size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(row(k), row(j));
        for (std::size_t i = 1; i < j; ++i) {
          u = d[i] * u - lam[k][i] * lam[j][i];
          mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i - 1].get_mpz_t());
        }
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw LinearDependenceError("lattice basis rows are linearly dependent");
          d[k] = u;
        }
      }
    }
    reduce(k, k - 1);
    const mpz_class lhs = delta.den * d[k] * d[k - 2];
    const mpz_class rhs = delta.num * d[k - 1] * d[k - 1] - delta.den * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap(k, kmax);
      k = std::max<std::size_t>(2, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
  }
  return basis;
}

}  // namespace recomb

#endif  // RECOMB_LINALG_LLL_HPP
