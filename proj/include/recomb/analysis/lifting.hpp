#ifndef RECOMB_ANALYSIS_LIFTING_HPP
#define RECOMB_ANALYSIS_LIFTING_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recomb/core/identity.hpp"
#include "recomb/core/monomial.hpp"
#include "recomb/core/permutation.hpp"

namespace recomb {

/// How a consequence one operation higher was obtained: a variable x
/// replaced by [x, new...] or the whole identity placed in [id, new...].
struct LiftRecipe {
  enum class Kind { substitution, embedding };

  Kind kind = Kind::substitution;
  int variable = -1;

  std::string to_string(int arity, int degree) const {
    std::string fresh;
    for (int k = 0; k < arity - 1; ++k) fresh += std::string(",") + static_cast<char>('a' + degree + k);
    if (kind == Kind::embedding) return "[*" + fresh + "]";
    const char x = static_cast<char>('a' + variable);
    return std::string(1, x) + " -> [" + x + fresh + "]";
  }
};

struct LiftedConsequence {
  LiftRecipe recipe;
  IdentityCombination result;
  bool collapsed = false;  // every term cancelled after straightening
};

namespace detail {

inline Tree fresh_node(Tree first, int arity, int degree) {
  std::vector<Tree> kids;
  kids.push_back(std::move(first));
  for (int k = 0; k < arity - 1; ++k) kids.push_back(Tree::leaf(degree + k));
  return Tree::node(std::move(kids));
}

inline void substitute_leaf(Tree& t, int x, int arity, int degree) {
  if (t.is_leaf()) {
    if (t.var == x) t = fresh_node(Tree::leaf(x), arity, degree);
    return;
  }
  for (auto& c : t.children) substitute_leaf(c, x, arity, degree);
}

}  // namespace detail

/// The d substitution consequences (in variable order) followed by the
/// embedding, all straightened. New variables are d, d+1, ..., d+n-2.
inline std::vector<LiftedConsequence> lift_identity(const IdentityCombination& id) {
  const int n = id.arity();
  const int d = id.degree();
  const int nd = d + n - 1;
  if (nd > kMaxVariables) throw InvalidDegreeError("lifted degree exceeds the variable alphabet");
  std::vector<LiftedConsequence> out;
  for (int x = 0; x <= d; ++x) {
    LiftedConsequence lc{{x < d ? LiftRecipe::Kind::substitution : LiftRecipe::Kind::embedding, x < d ? x : -1},
                         IdentityCombination(n, nd)};
    for (const auto& [m, c] : id.terms()) {
      Tree t = m.to_tree();
      if (x < d) {
        detail::substitute_leaf(t, x, n, d);
      } else {
        t = detail::fresh_node(std::move(t), n, d);
      }
      lc.result.add(straighten(t, n), c);
    }
    lc.collapsed = lc.result.is_zero();
    out.push_back(std::move(lc));
  }
  return out;
}

namespace detail {

// Right-hand sides for the identity-labelled representative of the second
// association type; m = sum of these terms holds for every expansion.
struct RewriteRule {
  int arity;
  int degree;
  std::string_view lhs;
  std::vector<std::pair<int, std::string_view>> rhs;
};

inline const std::array<RewriteRule, 2>& rewrite_rules() {
  static const std::array<RewriteRule, 2> rules{{
      {2, 4, "[[a,b],[c,d]]",
       {{-1, "[[[a,b],c],d]"},
        {1, "[[[a,c],b],d]"},
        {1, "[[[b,c],d],a]"},
        {1, "[[[b,d],a],c]"},
        {-1, "[[[b,d],c],a]"}}},
      {3, 7, "[[a,b,c],[d,e,f],g]",
       {{1, "[[[a,d,e],f,c],b,g]"},
        {1, "[[[a,d,c],b,f],e,g]"},
        {1, "[[[a,e,b],d,f],g,c]"},
        {-1, "[[[a,e,b],d,c],g,f]"},
        {1, "[[[a,e,b],f,c],d,g]"},
        {-1, "[[[a,e,f],d,b],g,c]"},
        {1, "[[[a,e,c],b,f],d,g]"},
        {-1, "[[[a,b,f],e,c],d,g]"},
        {-1, "[[[a,b,c],d,e],g,f]"},
        {-1, "[[[a,f,c],d,e],b,g]"},
        {1, "[[[d,e,b],a,c],g,f]"}}},
  }};
  return rules;
}

}  // namespace detail

/// Expresses a monomial of the second association type (ternary degree 7 or
/// binary degree 4) through monomials of the first type.
inline IdentityCombination rewrite_second_type(const Monomial& m) {
  for (const auto& rule : detail::rewrite_rules()) {
    if (rule.arity != m.arity() || rule.degree != m.degree()) continue;
    const Monomial lhs = parse_monomial(rule.lhs);
    if (m.shape_code() != lhs.shape_code()) break;
    // sigma sends the letters of the representative to the leaves of m
    std::vector<std::uint8_t> images;
    for (char c : m.leaf_code()) images.push_back(static_cast<std::uint8_t>(c));
    const Permutation sigma(images);
    IdentityCombination out(m.arity(), m.degree());
    for (const auto& [c, text] : rule.rhs) out.add(parse_monomial(text).relabeled(sigma.images()), c);
    return out;
  }
  throw std::invalid_argument("monomial " + m.to_string() + " is not of a rewritable second type");
}

}  // namespace recomb

#endif  // RECOMB_ANALYSIS_LIFTING_HPP
