#ifndef RECOMB_ANALYSIS_BASES_HPP
#define RECOMB_ANALYSIS_BASES_HPP

#include <vector>

#include "recomb/core/identity.hpp"
#include "recomb/expansion/expansion.hpp"
#include "recomb/linalg/hnf.hpp"
#include "recomb/linalg/lll.hpp"
#include "recomb/linalg/norms.hpp"
#include "recomb/linalg/rcf.hpp"

namespace recomb {

/// Nullspace basis from the row canonical form, sorted by norm.
inline std::vector<IntVector> canonical_basis(const ExpansionMatrix& e) {
  auto b = rcf_nullspace(e.entries);
  sort_by_norm(b);
  return b;
}

/// Lattice basis from the Hermite form of E^t, LLL reduced and sorted by norm.
inline std::vector<IntVector> reduced_basis(const ExpansionMatrix& e, LllParameter delta = {}) {
  auto lattice = nullspace_lattice(to_integer_matrix(e.entries));
  auto b = lll_reduce(std::move(lattice), delta).rows;
  sort_by_norm(b);
  return b;
}

inline std::vector<IdentityCombination> to_identities(const MonomialBasis& basis, const std::vector<IntVector>& vs) {
  std::vector<IdentityCombination> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(IdentityCombination::from_vector(basis, v));
  return out;
}

}  // namespace recomb

#endif  // RECOMB_ANALYSIS_BASES_HPP
