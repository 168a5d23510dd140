#ifndef RECOMB_ANALYSIS_MODULE_HPP
#define RECOMB_ANALYSIS_MODULE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "recomb/core/enumerate.hpp"
#include "recomb/core/identity.hpp"
#include "recomb/core/permutation.hpp"
#include "recomb/linalg/modular.hpp"
#include "recomb/util/parallel.hpp"

namespace recomb {

using SparseRow = std::vector<SparseEntry>;

/// Span over F_p of permuted copies of identities of one degree.
class ModuleSpan {
 public:
  static constexpr std::size_t no_ceiling = static_cast<std::size_t>(-1);

  explicit ModuleSpan(std::shared_ptr<const MonomialBasis> basis, std::uint32_t p = kDefaultPrime,
                      unsigned threads = default_thread_count())
      : basis_(std::move(basis)), space_(basis_->size(), p), threads_(std::max(1u, threads)) {
    if (static_cast<std::uint32_t>(basis_->degree()) >= p) {
      throw std::invalid_argument("modulus must exceed the degree");
    }
  }

  const MonomialBasis& basis() const { return *basis_; }
  std::uint32_t prime() const { return space_.prime(); }
  std::size_t rank() const { return space_.rank(); }

  /// Coefficients of sigma . id mod p, sorted by column and scaled so the
  /// first entry is 1.
  SparseRow row_of(const IdentityCombination& id, const Permutation* sigma = nullptr) const {
    check(id);
    SparseRow row;
    row.reserve(id.size());
    const std::uint32_t p = prime();
    for (const auto& [m, c] : id.terms()) {
      const auto col = sigma ? basis_->index_of(m.relabeled(sigma->images())) : basis_->index_of(m);
      row.push_back({static_cast<std::uint32_t>(col), space_.reduce(c)});
    }
    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.column < b.column; });
    std::erase_if(row, [](const SparseEntry& e) { return e.value == 0; });
    if (!row.empty() && row.front().value != 1) {
      const std::uint64_t inv = inverse(row.front().value, p);
      for (auto& e : row) e.value = static_cast<std::uint32_t>(e.value * inv % p);
    }
    return row;
  }

  bool contains(const IdentityCombination& id) {
    const auto row = row_of(id);
    return space_.contains_sparse(row);
  }

  RowOutcome add(const IdentityCombination& id, const Permutation* sigma = nullptr) {
    const auto row = row_of(id, sigma);
    return space_.add_sparse_row(row);
  }

  RowOutcome add_row(const SparseRow& row) { return space_.add_sparse_row(row); }

  /// Adds sigma . id for every sigma in S_d, in lexicographic order of sigma,
  /// and returns the new rank. Identical rows inside a block of permutations
  /// are inserted once. Stops as soon as the rank reaches ceiling.
  std::size_t add_orbit(const IdentityCombination& id, std::size_t ceiling = no_ceiling) {
    check(id);
    const int d = basis_->degree();
    std::uint64_t total = 1;
    for (int i = 2; i <= d; ++i) total *= static_cast<std::uint64_t>(i);
    const std::uint64_t block = std::min<std::uint64_t>(total, 40320);
    std::vector<SparseRow> rows;
    for (std::uint64_t start = 0; start < total && rank() < ceiling; start += block) {
      const std::uint64_t count = std::min(block, total - start);
      rows.assign(count, {});
      parallel_for_chunks(count, threads_, [&](std::size_t begin, std::size_t end) {
        if (begin == end) return;
        auto sigma = Permutation::nth(d, start + begin);
        for (std::size_t k = begin; k < end; ++k) {
          rows[k] = row_of(id, &sigma);
          sigma.next();
        }
      });
      std::sort(rows.begin(), rows.end(), row_less);
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
      for (const auto& r : rows) {
        if (space_.add_sparse_row(r) == RowOutcome::rank_increased && rank() >= ceiling) break;
      }
    }
    return rank();
  }

 private:
  static bool row_less(const SparseRow& a, const SparseRow& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const SparseEntry& x, const SparseEntry& y) {
      return x.column != y.column ? x.column < y.column : x.value < y.value;
    });
  }

  static std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  }

  void check(const IdentityCombination& id) const {
    if (id.arity() != basis_->arity() || id.degree() != basis_->degree()) {
      throw std::invalid_argument("identity does not match the module degree");
    }
  }

  std::shared_ptr<const MonomialBasis> basis_;
  ModularRowSpace space_;
  unsigned threads_;
};

/// Dimension of the S_d-module spanned by the identities, over F_p.
inline std::size_t module_rank(const std::vector<IdentityCombination>& ids,
                               std::shared_ptr<const MonomialBasis> basis, std::uint32_t p = kDefaultPrime,
                               unsigned threads = default_thread_count()) {
  ModuleSpan span(std::move(basis), p, threads);
  for (const auto& id : ids) {
    if (span.contains(id)) continue;
    span.add_orbit(id);
  }
  return span.rank();
}

struct SieveStep {
  std::size_t position = 0;  // 1-based index in the candidate list
  IdentityCombination identity;
  std::size_t rank = 0;      // module rank after adding it
};

struct SieveResult {
  std::vector<SieveStep> generators;
  std::size_t final_rank = 0;
};

/// Walks the candidates in order and keeps each one that enlarges the module
/// spanned by the ones kept so far; stops once target is reached.
inline SieveResult generator_sieve(const std::vector<IdentityCombination>& candidates,
                                   std::shared_ptr<const MonomialBasis> basis, std::size_t target,
                                   std::uint32_t p = kDefaultPrime, unsigned threads = default_thread_count()) {
  ModuleSpan span(std::move(basis), p, threads);
  SieveResult res;
  for (std::size_t i = 0; i < candidates.size() && span.rank() < target; ++i) {
    if (candidates[i].is_zero() || span.contains(candidates[i])) continue;
    span.add_orbit(candidates[i]);
    res.generators.push_back({i + 1, candidates[i], span.rank()});
  }
  res.final_rank = span.rank();
  return res;
}

/// 1-based positions of candidates that generate a module of dimension
/// target on their own.
inline std::vector<std::size_t> single_generators(const std::vector<IdentityCombination>& candidates,
                                                  std::shared_ptr<const MonomialBasis> basis, std::size_t target,
                                                  std::uint32_t p = kDefaultPrime,
                                                  unsigned threads = default_thread_count()) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ModuleSpan span(basis, p, threads);
    if (span.add_orbit(candidates[i], target) == target) out.push_back(i + 1);
  }
  return out;
}

}  // namespace recomb

#endif  // RECOMB_ANALYSIS_MODULE_HPP
