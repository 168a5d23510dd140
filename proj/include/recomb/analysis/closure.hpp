#ifndef RECOMB_ANALYSIS_CLOSURE_HPP
#define RECOMB_ANALYSIS_CLOSURE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "recomb/analysis/lifting.hpp"
#include "recomb/analysis/module.hpp"
#include "recomb/expansion/expansion.hpp"
#include "recomb/linalg/modular.hpp"

namespace recomb {

enum class ClosureMode { exact, certify };

enum class Verdict { no_new_identities, new_identities, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no_new_identities: return "no new identities";
    case Verdict::new_identities: return "new identities";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ClosureOptions {
  ClosureMode mode = ClosureMode::exact;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned threads = default_thread_count();
  // certify: give up after this many multiples of the nullspace dimension
  std::size_t sample_factor = 4;
};

struct ClosureReport {
  std::size_t monomials = 0;
  std::size_t matrix_rank = 0;
  std::size_t nullspace_dim = 0;
  std::size_t consequence_dim = 0;
  std::vector<LiftedConsequence> consequences;
  std::vector<std::size_t> cumulative;  // exact mode: rank after each consequence
  std::size_t samples = 0;              // certify mode: permuted rows inserted
  Verdict verdict = Verdict::inconclusive;
};

/// Decides whether degree d has identities beyond the consequences of the
/// known identities of degree d - (n - 1). Ranks are taken over F_p.
inline ClosureReport new_identity_test(int arity, int degree, const std::vector<IdentityCombination>& known,
                                       const ClosureOptions& opt = {}) {
  check_degree(arity, degree);
  auto basis = std::make_shared<const MonomialBasis>(arity, degree);
  ClosureReport rep;
  rep.monomials = basis->size();
  const auto e = build_expansion_matrix(basis, opt.threads);
  rep.matrix_rank = modular_rank(e.entries, opt.prime);
  rep.nullspace_dim = rep.monomials - rep.matrix_rank;

  for (const auto& id : known) {
    if (id.arity() != arity || id.degree() + arity - 1 != degree) {
      throw std::invalid_argument("known identity is not one operation below the target degree");
    }
    for (auto& lc : lift_identity(id)) rep.consequences.push_back(std::move(lc));
  }

  ModuleSpan span(basis, opt.prime, opt.threads);
  const std::size_t target = rep.nullspace_dim;
  if (opt.mode == ClosureMode::exact) {
    for (const auto& lc : rep.consequences) {
      if (!lc.collapsed && span.rank() < target && !span.contains(lc.result)) span.add_orbit(lc.result, target);
      rep.cumulative.push_back(span.rank());
    }
    rep.consequence_dim = span.rank();
    rep.verdict = rep.consequence_dim == target ? Verdict::no_new_identities : Verdict::new_identities;
    return rep;
  }

  std::vector<const IdentityCombination*> live;
  for (const auto& lc : rep.consequences)
    if (!lc.collapsed) live.push_back(&lc.result);
  std::mt19937_64 rng(opt.seed);
  const std::size_t cap = opt.sample_factor * std::max<std::size_t>(target, 1);
  const std::size_t block = 1024;
  std::vector<std::size_t> which;
  std::vector<Permutation> sigmas;
  std::vector<SparseRow> rows;
  while (!live.empty() && span.rank() < target && rep.samples < cap) {
    const std::size_t count = std::min(block, cap - rep.samples);
    which.resize(count);
    sigmas.resize(count);
    rows.assign(count, {});
    std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
    for (std::size_t k = 0; k < count; ++k) {
      which[k] = pick(rng);
      sigmas[k] = Permutation::random(degree, rng);
    }
    parallel_for_chunks(count, opt.threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) rows[k] = span.row_of(*live[which[k]], &sigmas[k]);
    });
    for (const auto& r : rows) {
      span.add_row(r);
      ++rep.samples;
      if (span.rank() >= target) break;
    }
  }
  rep.consequence_dim = span.rank();
  // sampling can only prove that the consequences fill the nullspace
  rep.verdict = rep.consequence_dim == target ? Verdict::no_new_identities : Verdict::inconclusive;
  return rep;
}

}  // namespace recomb

#endif  // RECOMB_ANALYSIS_CLOSURE_HPP
