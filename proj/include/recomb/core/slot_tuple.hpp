#ifndef RECOMB_CORE_SLOT_TUPLE_HPP
#define RECOMB_CORE_SLOT_TUPLE_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "recomb/core/monomial.hpp"

namespace recomb {

/// Ordered n-tuple of distinct variables; entry i occupies slot i.
class SlotTuple {
 public:
  SlotTuple() = default;

  explicit SlotTuple(std::vector<Variable> entries) : entries_(std::move(entries)) {
    std::uint32_t seen = 0;
    for (auto v : entries_) {
      if (seen & (1u << v.index())) throw MultilinearityError("slot tuple repeats a variable");
      seen |= 1u << v.index();
    }
  }

  std::size_t arity() const { return entries_.size(); }
  Variable operator[](std::size_t slot) const { return entries_[slot]; }
  const std::vector<Variable>& entries() const { return entries_; }

  /// "(a1,f2,g3)"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += entries_[i].letter();
      out += std::to_string(i + 1);
    }
    return out + ")";
  }

  friend bool operator==(const SlotTuple&, const SlotTuple&) = default;
  friend auto operator<=>(const SlotTuple&, const SlotTuple&) = default;

 private:
  std::vector<Variable> entries_;
};

/// n!·C(d,n)
inline std::size_t slot_tuple_count(int arity, int degree) {
  std::size_t c = 1;
  for (int i = 0; i < arity; ++i) c *= static_cast<std::size_t>(degree - i);
  return c;
}

/// Position of a tuple in the lexicographic list of arrangements.
inline std::size_t slot_tuple_index(const SlotTuple& t, int degree) {
  const int n = static_cast<int>(t.arity());
  std::uint32_t used = 0;
  std::size_t index = 0;
  for (int k = 0; k < n; ++k) {
    const int v = t[static_cast<std::size_t>(k)].index();
    if (v >= degree) throw std::out_of_range("slot tuple variable exceeds degree");
    int smaller = 0;
    for (int u = 0; u < v; ++u) smaller += (used & (1u << u)) ? 0 : 1;
    // arrangements of the remaining n-k-1 slots from degree-k-1 variables
    std::size_t tail = 1;
    for (int i = 0; i < n - k - 1; ++i) tail *= static_cast<std::size_t>(degree - k - 1 - i);
    index += static_cast<std::size_t>(smaller) * tail;
    used |= 1u << v;
  }
  return index;
}

/// All arrangements of n distinct variables out of d, lexicographically.
inline std::vector<SlotTuple> order_slot_tuples(int arity, int degree) {
  if (arity < 1 || degree < arity || degree > kMaxVariables) {
    throw std::invalid_argument("slot tuples need 1 <= arity <= degree");
  }
  std::vector<SlotTuple> out;
  out.reserve(slot_tuple_count(arity, degree));
  std::vector<Variable> cur;
  std::uint32_t used = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == arity) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v < degree; ++v) {
      if (used & (1u << v)) continue;
      used |= 1u << v;
      cur.emplace_back(v);
      self(self);
      cur.pop_back();
      used &= ~(1u << v);
    }
  };
  rec(rec);
  return out;
}

}  // namespace recomb

#endif  // RECOMB_CORE_SLOT_TUPLE_HPP
