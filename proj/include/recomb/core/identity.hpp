#ifndef RECOMB_CORE_IDENTITY_HPP
#define RECOMB_CORE_IDENTITY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

#include "recomb/core/enumerate.hpp"
#include "recomb/core/monomial.hpp"
#include "recomb/core/permutation.hpp"

namespace recomb {

/// Sparse integer combination of canonical monomials of one degree and arity.
/// Terms are kept in the global monomial order with no zero coefficients.
class IdentityCombination {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  IdentityCombination(int arity, int degree) : arity_(arity), degree_(degree) {
    detail::check_arity(arity);
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, std::int64_t coefficient) {
    if (m.arity() != arity_ || m.degree() != degree_) {
      throw std::invalid_argument("monomial " + m.to_string() + " has the wrong degree or arity");
    }
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t squared_norm() const {
    std::int64_t s = 0;
    for (const auto& [m, c] : terms_) s += c * c;
    return s;
  }

  /// Leading (smallest) monomial gets a positive coefficient.
  IdentityCombination normalized() const {
    IdentityCombination out = *this;
    if (!terms_.empty() && terms_.begin()->second < 0) {
      for (auto& [m, c] : out.terms_) c = -c;
    }
    return out;
  }

  IdentityCombination& operator+=(const IdentityCombination& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }

  IdentityCombination& operator-=(const IdentityCombination& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }

  friend IdentityCombination operator+(IdentityCombination a, const IdentityCombination& b) {
    return a += b;
  }
  friend IdentityCombination operator-(IdentityCombination a, const IdentityCombination& b) {
    return a -= b;
  }

  IdentityCombination scaled(std::int64_t k) const {
    IdentityCombination out(arity_, degree_);
    for (const auto& [m, c] : terms_) out.add(m, c * k);
    return out;
  }

  /// Dense coefficient vector over the columns of basis.
  std::vector<std::int64_t> to_vector(const MonomialBasis& basis) const {
    if (basis.arity() != arity_ || basis.degree() != degree_) {
      throw std::invalid_argument("basis does not match identity");
    }
    std::vector<std::int64_t> v(basis.size(), 0);
    for (const auto& [m, c] : terms_) v[basis.index_of(m)] = c;
    return v;
  }

  template <class Int>
  static IdentityCombination from_vector(const MonomialBasis& basis, const std::vector<Int>& v) {
    if (v.size() != basis.size()) throw std::invalid_argument("vector length does not match basis");
    IdentityCombination out(basis.arity(), basis.degree());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) out.add(basis[i], to_int64(v[i]));
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + " ";
      out += m.to_string();
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const IdentityCombination&, const IdentityCombination&) = default;

 private:
  template <class Int>
  static std::int64_t to_int64(const Int& x) {
    if constexpr (std::is_integral_v<Int>) {
      return static_cast<std::int64_t>(x);
    } else {
      if (!x.fits_slong_p()) throw std::overflow_error("coefficient exceeds 64 bits");
      return x.get_si();
    }
  }

  void check_compatible(const IdentityCombination& other) const {
    if (other.arity_ != arity_ || other.degree_ != degree_) {
      throw std::invalid_argument("identities of different degree or arity");
    }
  }

  int arity_;
  int degree_;
  Terms terms_;
};

/// Relabels every leaf v as sigma(v), straightens and merges.
inline IdentityCombination apply_permutation(const IdentityCombination& id, const Permutation& sigma) {
  if (sigma.size() != id.degree()) throw std::invalid_argument("permutation size mismatch");
  IdentityCombination out(id.arity(), id.degree());
  for (const auto& [m, c] : id.terms()) out.add(m.relabeled(sigma.images()), c);
  return out;
}

}  // namespace recomb

#endif  // RECOMB_CORE_IDENTITY_HPP
