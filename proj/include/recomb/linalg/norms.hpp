#ifndef RECOMB_LINALG_NORMS_HPP
#define RECOMB_LINALG_NORMS_HPP

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "recomb/linalg/dense_matrix.hpp"

namespace recomb {

/// Sorts by squared norm; ties are broken by the coefficient vectors in
/// ascending lexicographic order, which makes the order independent of how
/// the vectors were produced.
inline void sort_by_norm(std::vector<IntVector>& vs) {
  std::vector<std::pair<mpz_class, IntVector>> keyed;
  keyed.reserve(vs.size());
  for (auto& v : vs) keyed.emplace_back(squared_norm(v), std::move(v));
  std::sort(keyed.begin(), keyed.end());
  vs.clear();
  for (auto& [n, v] : keyed) vs.push_back(std::move(v));
}

inline std::vector<mpz_class> squared_norms(const std::vector<IntVector>& vs) {
  std::vector<mpz_class> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(squared_norm(v));
  return out;
}

}  // namespace recomb

#endif  // RECOMB_LINALG_NORMS_HPP
