#ifndef RECOMB_CORE_MONOMIAL_HPP
#define RECOMB_CORE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recomb {

/// Largest supported operation arity.
inline constexpr int kMaxArity = 8;
/// Variables are displayed as the letters a..z.
inline constexpr int kMaxVariables = 26;

class MultilinearityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidDegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Variable {
 public:
  constexpr Variable() = default;
  constexpr explicit Variable(int index) : index_(static_cast<std::uint8_t>(index)) {
    if (index < 0 || index >= kMaxVariables) {
      throw std::out_of_range("variable index out of range");
    }
  }

  static Variable from_letter(char c) {
    if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("not a variable letter: ") + c);
    return Variable(c - 'a');
  }

  constexpr int index() const { return index_; }
  constexpr char letter() const { return static_cast<char>('a' + index_); }

  friend constexpr auto operator<=>(Variable, Variable) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Raw n-ary tree with variable leaves; children are in no particular order.
struct Tree {
  int var = -1;
  std::vector<Tree> children;

  static Tree leaf(int v) { return Tree{v, {}}; }
  static Tree node(std::vector<Tree> kids) { return Tree{-1, std::move(kids)}; }

  bool is_leaf() const { return children.empty(); }
};

namespace detail {

// A canonical subtree is stored as two byte strings: the shape code in
// preorder (one byte per node or leaf, 255 - degree) and the leaf sequence.
// For two subtrees of the same arity, lexicographic comparison of
// (shape, leaves) is the canonical order: larger subtrees first, then shape
// recursively, then leaves. Equal degree implies equal shape length.
inline char degree_code(int degree) { return static_cast<char>(255 - degree); }
inline int code_degree(char c) { return 255 - static_cast<unsigned char>(c); }
inline constexpr char kLeafCode = static_cast<char>(254);

struct CodePair {
  std::string shape;
  std::string leaves;

  friend auto operator<=>(const CodePair&, const CodePair&) = default;
};

inline void canonicalize(std::string_view shape, std::string_view leaves, std::size_t& sp,
                         std::size_t& lp, int arity, const std::uint8_t* relabel,
                         std::string& out_shape, std::string& out_leaves) {
  const char head = shape[sp++];
  if (head == kLeafCode) {
    const auto v = static_cast<std::uint8_t>(leaves[lp++]);
    out_shape += head;
    out_leaves += static_cast<char>(relabel ? relabel[v] : v);
    return;
  }
  std::array<CodePair, kMaxArity> kids;
  for (int i = 0; i < arity; ++i) {
    canonicalize(shape, leaves, sp, lp, arity, relabel, kids[i].shape, kids[i].leaves);
  }
  // insertion sort; arity is tiny
  for (int i = 1; i < arity; ++i) {
    for (int j = i; j > 0 && kids[j] < kids[j - 1]; --j) std::swap(kids[j], kids[j - 1]);
  }
  out_shape += head;
  for (int i = 0; i < arity; ++i) {
    out_shape += kids[i].shape;
    out_leaves += kids[i].leaves;
  }
}

inline int tree_to_code(const Tree& t, int arity, std::string& shape, std::string& leaves,
                        std::uint32_t& seen) {
  if (t.is_leaf()) {
    if (t.var < 0 || t.var >= kMaxVariables) throw std::invalid_argument("leaf without variable");
    if (seen & (1u << t.var)) {
      throw MultilinearityError(std::string("repeated variable ") + static_cast<char>('a' + t.var));
    }
    seen |= 1u << t.var;
    shape += kLeafCode;
    leaves += static_cast<char>(t.var);
    return 1;
  }
  if (static_cast<int>(t.children.size()) != arity) {
    throw std::invalid_argument("node has " + std::to_string(t.children.size()) +
                                " children, expected " + std::to_string(arity));
  }
  const std::size_t at = shape.size();
  shape += '\0';
  int degree = 0;
  for (const auto& c : t.children) degree += tree_to_code(c, arity, shape, leaves, seen);
  shape[at] = degree_code(degree);
  return degree;
}

inline void append_display(std::string_view shape, std::string_view leaves, std::size_t& sp,
                           std::size_t& lp, int arity, bool letters, std::string& out) {
  const char head = shape[sp++];
  if (head == kLeafCode) {
    out += letters ? static_cast<char>('a' + static_cast<std::uint8_t>(leaves[lp])) : '*';
    ++lp;
    return;
  }
  out += '[';
  for (int i = 0; i < arity; ++i) {
    if (i) out += ',';
    append_display(shape, leaves, sp, lp, arity, letters, out);
  }
  out += ']';
}

inline Tree code_to_tree(std::string_view shape, std::string_view leaves, std::size_t& sp,
                         std::size_t& lp, int arity) {
  const char head = shape[sp++];
  if (head == kLeafCode) return Tree::leaf(static_cast<std::uint8_t>(leaves[lp++]));
  std::vector<Tree> kids;
  kids.reserve(arity);
  for (int i = 0; i < arity; ++i) kids.push_back(code_to_tree(shape, leaves, sp, lp, arity));
  return Tree::node(std::move(kids));
}

inline void check_arity(int arity) {
  if (arity < 2 || arity > kMaxArity) {
    throw std::invalid_argument("arity must lie in [2, " + std::to_string(kMaxArity) + "]");
  }
}

}  // namespace detail

/// Shape of a monomial modulo complete symmetry.
class AssociationType {
 public:
  AssociationType(int arity, std::string shape) : arity_(arity), shape_(std::move(shape)) {
    detail::check_arity(arity);
    degree_ = detail::code_degree(shape_.at(0));
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const std::string& shape() const { return shape_; }
  int internal_nodes() const { return (degree_ - 1) / (arity_ - 1); }

  /// Number of leaf labelings fixing the shape: product over nodes of the
  /// factorials of the multiplicities of identical child subtrees.
  std::uint64_t automorphism_count() const {
    std::size_t sp = 0;
    return automorphisms(sp);
  }

  /// Number of distinct multilinear monomials of this type.
  std::uint64_t monomial_count() const {
    std::uint64_t f = 1;
    for (int i = 2; i <= degree_; ++i) f *= static_cast<std::uint64_t>(i);
    return f / automorphism_count();
  }

  std::string to_string() const {
    std::string out;
    std::size_t sp = 0, lp = 0;
    const std::string dummy(static_cast<std::size_t>(degree_), '\0');
    detail::append_display(shape_, dummy, sp, lp, arity_, false, out);
    return out;
  }

  friend bool operator==(const AssociationType&, const AssociationType&) = default;
  friend auto operator<=>(const AssociationType& a, const AssociationType& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.shape_ <=> b.shape_;
  }

 private:
  std::uint64_t automorphisms(std::size_t& sp) const {
    const std::size_t start = sp;
    const char head = shape_[sp++];
    if (head == detail::kLeafCode) return 1;
    std::uint64_t total = 1;
    std::vector<std::string_view> kids;
    for (int i = 0; i < arity_; ++i) {
      const std::size_t child_start = sp;
      total *= automorphisms(sp);
      kids.emplace_back(shape_.data() + child_start, sp - child_start);
    }
    (void)start;
    std::sort(kids.begin(), kids.end());
    for (std::size_t i = 0; i < kids.size();) {
      std::size_t j = i;
      while (j < kids.size() && kids[j] == kids[i]) ++j;
      for (std::size_t k = 2; k <= j - i; ++k) total *= k;
      i = j;
    }
    return total;
  }

  int arity_;
  int degree_;
  std::string shape_;
};

/// Multilinear monomial in canonical (straightened) form.
class Monomial {
 public:
  Monomial() = default;

  /// Canonicalizes a preorder (shape, leaves) code, optionally relabeling
  /// leaf v to relabel[v].
  static Monomial from_code(int arity, std::string_view shape, std::string_view leaves,
                            const std::uint8_t* relabel = nullptr) {
    Monomial m;
    m.arity_ = arity;
    m.shape_.reserve(shape.size());
    m.leaves_.reserve(leaves.size());
    std::size_t sp = 0, lp = 0;
    detail::canonicalize(shape, leaves, sp, lp, arity, relabel, m.shape_, m.leaves_);
    return m;
  }

  static Monomial leaf(Variable v, int arity) {
    detail::check_arity(arity);
    Monomial m;
    m.arity_ = arity;
    m.shape_ = std::string(1, detail::kLeafCode);
    m.leaves_ = std::string(1, static_cast<char>(v.index()));
    return m;
  }

  int arity() const { return arity_; }
  int degree() const { return static_cast<int>(leaves_.size()); }
  bool is_leaf() const { return leaves_.size() == 1; }
  const std::string& shape_code() const { return shape_; }
  const std::string& leaf_code() const { return leaves_; }

  AssociationType type() const { return AssociationType(arity_, shape_); }

  std::vector<Variable> leaf_sequence() const {
    std::vector<Variable> out;
    out.reserve(leaves_.size());
    for (char c : leaves_) out.emplace_back(static_cast<std::uint8_t>(c));
    return out;
  }

  /// Relabels leaf v as images[v] and straightens.
  Monomial relabeled(std::span<const std::uint8_t> images) const {
    for (char c : leaves_) {
      if (static_cast<std::uint8_t>(c) >= images.size()) {
        throw std::invalid_argument("relabeling does not cover every variable");
      }
    }
    return from_code(arity_, shape_, leaves_, images.data());
  }

  Tree to_tree() const {
    std::size_t sp = 0, lp = 0;
    return detail::code_to_tree(shape_, leaves_, sp, lp, arity_);
  }

  std::string to_string() const {
    std::string out;
    std::size_t sp = 0, lp = 0;
    detail::append_display(shape_, leaves_, sp, lp, arity_, true, out);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // global order: type major, leaf sequence minor
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  int arity_ = 0;
  std::string shape_;
  std::string leaves_;
};

/// Canonical representative of a raw tree under complete symmetry.
inline Monomial straighten(const Tree& raw, int arity) {
  detail::check_arity(arity);
  std::string shape, leaves;
  std::uint32_t seen = 0;
  detail::tree_to_code(raw, arity, shape, leaves, seen);
  return Monomial::from_code(arity, shape, leaves);
}

/// Parses bracket notation such as "[[a,b,c],d,e]". The arity is taken from
/// the outermost node; every node must agree.
inline Tree parse_tree(std::string_view text, int* arity_out = nullptr) {
  std::size_t pos = 0;
  int arity = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::function<Tree()> parse = [&]() -> Tree {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of monomial");
    const char c = text[pos];
    if (c >= 'a' && c <= 'z') {
      ++pos;
      return Tree::leaf(c - 'a');
    }
    if (c != '[') throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    ++pos;
    std::vector<Tree> kids;
    for (;;) {
      kids.push_back(parse());
      skip();
      if (pos >= text.size()) throw std::invalid_argument("unterminated bracket");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "'");
    }
    const int n = static_cast<int>(kids.size());
    if (arity == 0) arity = n;
    if (n != arity) throw std::invalid_argument("inconsistent node arity in monomial");
    return Tree::node(std::move(kids));
  };
  Tree t = parse();
  skip();
  if (pos != text.size()) throw std::invalid_argument("trailing characters after monomial");
  if (arity_out) *arity_out = arity;
  return t;
}

/// Parses and straightens a bracket monomial; arity is inferred.
inline Monomial parse_monomial(std::string_view text) {
  int arity = 0;
  Tree t = parse_tree(text, &arity);
  if (t.is_leaf()) throw std::invalid_argument("a monomial needs at least one operation");
  return straighten(t, arity);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    const std::size_t a = std::hash<std::string>{}(m.shape_code());
    const std::size_t b = std::hash<std::string>{}(m.leaf_code());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};

}  // namespace recomb

#endif  // RECOMB_CORE_MONOMIAL_HPP
