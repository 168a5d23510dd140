// Library walk-through: find the ternary degree 7 identities and the few
// identities that generate all of them under relabelling.

#include <iostream>
#include <memory>

#include "recomb/recomb.hpp"

int main() {
  using namespace recomb;

  auto basis = std::make_shared<const MonomialBasis>(3, 7);
  const auto e = build_expansion_matrix(basis);
  std::cout << "E is " << e.rows() << " x " << e.cols() << ", rank " << modular_rank(e.entries) << "\n";

  const auto reduced = reduced_basis(e);
  std::cout << "nullspace lattice: " << reduced.size() << " vectors, shortest squared norm "
            << squared_norm(reduced.front()) << "\n";

  const auto ids = to_identities(*basis, reduced);
  const auto sieve = generator_sieve(ids, basis, reduced.size());
  for (const auto& g : sieve.generators) {
    std::cout << "generator at position " << g.position << " (norm " << g.identity.squared_norm() << ", rank "
              << g.rank << "):\n"
              << identity_text(g.identity);
  }

  // a monomial of the second type in terms of the first
  const auto m = parse_monomial("[[a,c,e],[b,d,f],g]");
  const auto rhs = rewrite_second_type(m);
  auto check = rhs.scaled(-1);
  check.add(m, 1);
  std::cout << m.to_string() << " = " << rhs.to_string() << "\n"
            << "difference expands to " << evaluate_identity(check).size() << " slot tuples\n";
  return sieve.final_rank == reduced.size() ? 0 : 1;
}
