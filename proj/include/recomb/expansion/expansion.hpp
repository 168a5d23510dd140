#ifndef RECOMB_EXPANSION_EXPANSION_HPP
#define RECOMB_EXPANSION_EXPANSION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "recomb/core/enumerate.hpp"
#include "recomb/core/identity.hpp"
#include "recomb/core/monomial.hpp"
#include "recomb/core/slot_tuple.hpp"
#include "recomb/linalg/dense_matrix.hpp"
#include "recomb/util/parallel.hpp"

namespace recomb {

/// Integer combination of slot tuples over the variables 0..degree-1.
class SlotCombination {
 public:
  using Terms = std::map<SlotTuple, std::int64_t>;

  SlotCombination(int arity, int degree) : arity_(arity), degree_(degree) {}

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const SlotTuple& t, std::int64_t c) {
    if (static_cast<int>(t.arity()) != arity_) throw std::invalid_argument("slot tuple has wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const SlotTuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Sum of all coefficients.
  std::int64_t mass() const {
    std::int64_t s = 0;
    for (const auto& [t, c] : terms_) s += c;
    return s;
  }

  /// Variables occurring in any tuple, as a bit mask.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& [t, c] : terms_)
      for (auto v : t.entries()) s |= 1u << v.index();
    return s;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [t, c] : terms_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const auto a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a) + " ";
      out += t.to_string();
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const SlotCombination&, const SlotCombination&) = default;

 private:
  int arity_;
  int degree_;
  Terms terms_;
};

namespace detail {

// Slot marginals of a combination: weight[k * vars + v] is the total
// coefficient of tuples carrying v in slot k. The result of the operation
// depends on its arguments only through these.
struct Marginals {
  int arity = 0;
  int vars = 0;
  std::vector<std::int64_t> weight;
  std::int64_t mass = 0;
  std::uint32_t support = 0;

  std::int64_t at(int slot, int v) const { return weight[static_cast<std::size_t>(slot * vars + v)]; }
};

inline Marginals lone_variable_marginals(int arity, int vars, int v) {
  Marginals m{arity, vars, std::vector<std::int64_t>(static_cast<std::size_t>(arity * vars), 0), 1, 1u << v};
  for (int k = 0; k < arity; ++k) m.weight[static_cast<std::size_t>(k * vars + v)] = 1;
  return m;
}

inline Marginals marginals_of(const SlotCombination& c) {
  Marginals m{c.arity(), c.degree(), std::vector<std::int64_t>(static_cast<std::size_t>(c.arity() * c.degree()), 0), 0, 0};
  for (const auto& [t, coef] : c.terms()) {
    for (int k = 0; k < c.arity(); ++k) {
      const int v = t[static_cast<std::size_t>(k)].index();
      m.weight[static_cast<std::size_t>(k * m.vars + v)] += coef;
      m.support |= 1u << v;
    }
    m.mass += coef;
  }
  return m;
}

inline void check_disjoint(std::span<const Marginals> args) {
  std::uint32_t seen = 0;
  for (const auto& a : args) {
    if (seen & a.support) throw MultilinearityError("operation arguments share a variable");
    seen |= a.support;
  }
}

/// Marginals of the operation applied to args, without forming tuples.
inline Marginals combine_marginals(std::span<const Marginals> args) {
  check_disjoint(args);
  const int n = static_cast<int>(args.size());
  const int vars = args[0].vars;
  std::int64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;  // (n-1)!
  Marginals out{n, vars, std::vector<std::int64_t>(static_cast<std::size_t>(n * vars), 0), fact * n, 0};
  for (int i = 0; i < n; ++i) {
    std::int64_t others = fact;
    for (int j = 0; j < n; ++j)
      if (j != i) others *= args[static_cast<std::size_t>(j)].mass;
    const auto& a = args[static_cast<std::size_t>(i)];
    for (std::size_t idx = 0; idx < a.weight.size(); ++idx) out.weight[idx] += a.weight[idx] * others;
    out.mass *= a.mass;
    out.support |= a.support;
  }
  return out;
}

/// Full tuple combination of the operation applied to args: sum over the
/// assignments of arguments to slots of the slot-wise products.
inline SlotCombination combine_tuples(std::span<const Marginals> args, int degree) {
  check_disjoint(args);
  const int n = static_cast<int>(args.size());
  SlotCombination out(n, degree);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Variable> cur;
  do {
    // slot k takes its entry from argument sigma[k]
    auto rec = [&](auto&& self, int k, std::int64_t coef) -> void {
      if (k == n) {
        out.add(SlotTuple(cur), coef);
        return;
      }
      const auto& a = args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
      for (int v = 0; v < a.vars; ++v) {
        const std::int64_t w = a.at(k, v);
        if (w == 0) continue;
        cur.emplace_back(v);
        self(self, k + 1, coef * w);
        cur.pop_back();
      }
    };
    rec(rec, 0, 1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

inline Marginals subtree_marginals(const std::string& shape, const std::string& leaves, std::size_t& sp,
                                   std::size_t& lp, int arity, int vars) {
  const char head = shape[sp++];
  if (head == kLeafCode) return lone_variable_marginals(arity, vars, static_cast<std::uint8_t>(leaves[lp++]));
  std::vector<Marginals> kids;
  kids.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) kids.push_back(subtree_marginals(shape, leaves, sp, lp, arity, vars));
  return combine_marginals(kids);
}

}  // namespace detail

/// An argument of the operation: a lone variable (the tuple (x, ..., x) of
/// its own molecule) or a combination of slot tuples.
using Operand = std::variant<Variable, SlotCombination>;

/// The n-ary recombination of n operands over disjoint variable sets.
inline SlotCombination expand_operation(std::span<const Operand> args, int degree) {
  if (args.size() < 2) throw std::invalid_argument("operation needs at least two arguments");
  const int n = static_cast<int>(args.size());
  std::vector<detail::Marginals> ms;
  for (const auto& a : args) {
    if (const auto* v = std::get_if<Variable>(&a)) {
      if (v->index() >= degree) throw std::out_of_range("variable exceeds degree");
      ms.push_back(detail::lone_variable_marginals(n, degree, v->index()));
    } else {
      const auto& c = std::get<SlotCombination>(a);
      if (c.arity() != n || c.degree() != degree) throw std::invalid_argument("operand shape mismatch");
      ms.push_back(detail::marginals_of(c));
    }
  }
  return detail::combine_tuples(ms, degree);
}

/// Expansion of a canonical monomial as a combination of slot tuples.
inline SlotCombination expand_monomial(const Monomial& m) {
  if (m.is_leaf()) throw std::invalid_argument("cannot expand a bare variable");
  const int n = m.arity();
  const int vars = m.degree();
  const auto& shape = m.shape_code();
  const auto& leaves = m.leaf_code();
  std::size_t sp = 1, lp = 0;
  std::vector<detail::Marginals> kids;
  for (int i = 0; i < n; ++i) kids.push_back(detail::subtree_marginals(shape, leaves, sp, lp, n, vars));
  return detail::combine_tuples(kids, vars);
}

/// Sum of coefficient times expansion; zero exactly when the identity holds.
inline SlotCombination evaluate_identity(const IdentityCombination& id) {
  SlotCombination out(id.arity(), id.degree());
  for (const auto& [m, c] : id.terms()) {
    const auto ex = expand_monomial(m);
    for (const auto& [t, e] : ex.terms()) out.add(t, c * e);
  }
  return out;
}

/// Rows are slot tuples in lexicographic order; columns are the monomials of
/// the basis; entry (i, j) is the coefficient of tuple i in monomial j.
struct ExpansionMatrix {
  int arity = 0;
  int degree = 0;
  std::shared_ptr<const MonomialBasis> basis;
  std::vector<SlotTuple> row_tuples;
  DenseMatrix<std::int64_t> entries;

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
};

inline ExpansionMatrix build_expansion_matrix(std::shared_ptr<const MonomialBasis> basis,
                                              unsigned threads = default_thread_count()) {
  const int n = basis->arity();
  const int d = basis->degree();
  if (d < n) throw InvalidDegreeError("expansion matrix needs degree >= arity");
  ExpansionMatrix e;
  e.arity = n;
  e.degree = d;
  e.row_tuples = order_slot_tuples(n, d);
  e.entries = DenseMatrix<std::int64_t>(e.row_tuples.size(), basis->size());
  parallel_for_chunks(basis->size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      const auto ex = expand_monomial((*basis)[j]);
      for (const auto& [t, c] : ex.terms()) e.entries(slot_tuple_index(t, d), j) = c;
    }
  });
  e.basis = std::move(basis);
  return e;
}

inline ExpansionMatrix build_expansion_matrix(int arity, int degree, unsigned threads = default_thread_count()) {
  check_degree(arity, degree);
  return build_expansion_matrix(std::make_shared<const MonomialBasis>(arity, degree), threads);
}

}  // namespace recomb

#endif  // RECOMB_EXPANSION_EXPANSION_HPP
