#pragma once

// Test-side helpers: a literal expansion oracle, random monomials and a
// plain modular rank. None of these reuse the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "recomb/recomb.hpp"

namespace oracle {

using Tuple = std::vector<int>;
using Value = std::map<Tuple, std::int64_t>;

// Sum over every choice of one tuple per argument and every sigma in S_n of
// (t_sigma(1)[1], ..., t_sigma(n)[n]); a variable x is the tuple (x, ..., x).
inline Value evaluate(const recomb::Tree& t, int n) {
  if (t.is_leaf()) return {{Tuple(static_cast<std::size_t>(n), t.var), 1}};
  std::vector<std::vector<std::pair<Tuple, std::int64_t>>> args;
  for (const auto& c : t.children) {
    const auto v = evaluate(c, n);
    args.emplace_back(v.begin(), v.end());
  }
  Value out;
  std::vector<std::size_t> pick(args.size(), 0);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  while (true) {
    std::int64_t coef = 1;
    for (std::size_t i = 0; i < args.size(); ++i) coef *= args[i][pick[i]].second;
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Tuple r(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) r[j] = args[sigma[j]][pick[sigma[j]]].first[j];
      if ((out[r] += coef) == 0) out.erase(r);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::size_t i = 0;
    while (i < args.size() && ++pick[i] == args[i].size()) pick[i++] = 0;
    if (i == args.size()) break;
  }
  return out;
}

inline Value evaluate(const recomb::IdentityCombination& id) {
  Value out;
  for (const auto& [m, c] : id.terms())
    for (const auto& [t, e] : evaluate(m.to_tree(), id.arity()))
      if ((out[t] += c * e) == 0) out.erase(t);
  return out;
}

inline Value from_library(const recomb::SlotCombination& s) {
  Value out;
  for (const auto& [t, c] : s.terms()) {
    Tuple r;
    for (auto v : t.entries()) r.push_back(v.index());
    out[r] = c;
  }
  return out;
}

// Rank over F_p by textbook elimination on a dense copy.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    for (auto& x : r) x = ((x % p) + p) % p;
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t j = 0; j < cols && rank < rows.size(); ++j) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][j] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const auto s = inv(rows[rank][j]);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][j] == 0) continue;
      const auto f = rows[i][j];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = ((rows[i][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Determinant by cofactor expansion, for tiny matrices.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
  }
  return det;
}

}  // namespace oracle

namespace gen {

// Random multilinear tree with k operations: repeatedly join n random parts.
template <class Rng>
recomb::Tree random_tree(int n, int k, Rng& rng) {
  const int d = k * (n - 1) + 1;
  std::vector<int> vars(static_cast<std::size_t>(d));
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<recomb::Tree> parts;
  for (int v : vars) parts.push_back(recomb::Tree::leaf(v));
  while (parts.size() > 1) {
    std::shuffle(parts.begin(), parts.end(), rng);
    std::vector<recomb::Tree> kids(std::make_move_iterator(parts.end() - n), std::make_move_iterator(parts.end()));
    parts.resize(parts.size() - static_cast<std::size_t>(n));
    parts.push_back(recomb::Tree::node(std::move(kids)));
  }
  return parts.front();
}

// Same tree with children shuffled at every node.
template <class Rng>
recomb::Tree shuffled(recomb::Tree t, Rng& rng) {
  for (auto& c : t.children) c = shuffled(std::move(c), rng);
  std::shuffle(t.children.begin(), t.children.end(), rng);
  return t;
}

inline recomb::SlotCombination permuted(const recomb::SlotCombination& s, const recomb::Permutation& sigma) {
  recomb::SlotCombination out(s.arity(), s.degree());
  for (const auto& [t, c] : s.terms()) {
    std::vector<recomb::Variable> vs;
    for (auto v : t.entries()) vs.emplace_back(sigma(v.index()));
    out.add(recomb::SlotTuple(vs), c);
  }
  return out;
}

inline std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace gen
