#ifndef RECOMB_CORE_ENUMERATE_HPP
#define RECOMB_CORE_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "recomb/core/monomial.hpp"

namespace recomb {

/// Throws unless degree = k(arity - 1) + 1 for some k >= 0.
inline void check_degree(int arity, int degree) {
  detail::check_arity(arity);
  if (degree < 1 || (degree - 1) % (arity - 1) != 0) {
    throw InvalidDegreeError("degree " + std::to_string(degree) + " is not of the form k(" +
                             std::to_string(arity) + "-1)+1");
  }
  if (degree > kMaxVariables) throw InvalidDegreeError("degree exceeds the variable alphabet");
}

namespace detail {

inline const std::vector<std::string>& shapes_of_degree(
    int arity, int degree, std::map<int, std::vector<std::string>>& memo) {
  if (auto it = memo.find(degree); it != memo.end()) return it->second;
  std::vector<std::string> out;
  if (degree == 1) {
    out.emplace_back(1, kLeafCode);
  } else {
    // all shapes that can appear as a child, in canonical order
    std::vector<std::pair<std::string, int>> pool;
    for (int d = 1; d <= degree - (arity - 1); d += arity - 1) {
      for (const auto& s : shapes_of_degree(arity, d, memo)) pool.emplace_back(s, d);
    }
    std::sort(pool.begin(), pool.end());
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (static_cast<int>(pick.size()) == arity) {
        if (remaining != 0) return;
        std::string s(1, degree_code(degree));
        for (auto i : pick) s += pool[i].first;
        out.push_back(std::move(s));
        return;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].second > remaining) continue;
        pick.push_back(i);
        self(self, i, remaining - pool[i].second);
        pick.pop_back();
      }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
  }
  return memo.emplace(degree, std::move(out)).first->second;
}

}  // namespace detail

/// All association types of the given degree modulo complete symmetry, in
/// canonical order (deepest nesting in the first argument comes first).
inline std::vector<AssociationType> enumerate_canonical_types(int arity, int degree) {
  check_degree(arity, degree);
  std::map<int, std::vector<std::string>> memo;
  std::vector<AssociationType> out;
  for (const auto& s : detail::shapes_of_degree(arity, degree, memo)) out.emplace_back(arity, s);
  return out;
}

/// All canonical monomials of type t on variables 0..d-1, in increasing order.
inline std::vector<Monomial> enumerate_monomials(const AssociationType& t) {
  const int d = t.degree();
  std::string leaves(static_cast<std::size_t>(d), '\0');
  std::iota(leaves.begin(), leaves.end(), '\0');
  std::vector<Monomial> out;
  do {
    out.push_back(Monomial::from_code(t.arity(), t.shape(), leaves));
  } while (std::next_permutation(leaves.begin(), leaves.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != t.monomial_count()) {
    throw std::logic_error("monomial count " + std::to_string(out.size()) +
                           " disagrees with the orbit formula for " + t.to_string());
  }
  return out;
}

/// Column index of the expansion matrix: every canonical monomial of one
/// degree, ordered by type and then by leaf sequence.
class MonomialBasis {
 public:
  MonomialBasis(int arity, int degree)
      : arity_(arity), degree_(degree), types_(enumerate_canonical_types(arity, degree)) {
    for (const auto& t : types_) {
      type_offsets_.push_back(monomials_.size());
      auto ms = enumerate_monomials(t);
      monomials_.insert(monomials_.end(), ms.begin(), ms.end());
    }
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<AssociationType>& types() const { return types_; }
  const std::vector<std::size_t>& type_offsets() const { return type_offsets_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }

  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial not in basis: " + m.to_string());
    return it->second;
  }

  std::size_t type_index(std::size_t column) const {
    auto it = std::upper_bound(type_offsets_.begin(), type_offsets_.end(), column);
    return static_cast<std::size_t>(it - type_offsets_.begin()) - 1;
  }

 private:
  int arity_;
  int degree_;
  std::vector<AssociationType> types_;
  std::vector<std::size_t> type_offsets_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

}  // namespace recomb

#endif  // RECOMB_CORE_ENUMERATE_HPP
