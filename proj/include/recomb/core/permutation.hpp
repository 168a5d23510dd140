#ifndef RECOMB_CORE_PERMUTATION_HPP
#define RECOMB_CORE_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace recomb {

/// Bijection on variable indices {0, ..., d-1}; variable i is sent to images[i].
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto v : images_) {
      if (v >= images_.size() || hit[v]) throw std::invalid_argument("not a permutation");
      hit[v] = true;
    }
  }

  static Permutation identity(int size) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(size));
    std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
    return p;
  }

  static Permutation transposition(int size, int i, int j) {
    auto p = identity(size);
    std::swap(p.images_.at(static_cast<std::size_t>(i)), p.images_.at(static_cast<std::size_t>(j)));
    return p;
  }

  template <class Rng>
  static Permutation random(int size, Rng& rng) {
    auto p = identity(size);
    std::shuffle(p.images_.begin(), p.images_.end(), rng);
    return p;
  }

  /// The permutation of rank k in lexicographic order of image sequences.
  static Permutation nth(int size, std::uint64_t k) {
    std::vector<std::uint8_t> pool(static_cast<std::size_t>(size));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(size) + 1, 1);
    for (int i = 1; i <= size; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i) - 1] * static_cast<std::uint64_t>(i);
    if (k >= fact[static_cast<std::size_t>(size)]) throw std::out_of_range("permutation rank out of range");
    Permutation p;
    for (int i = size; i > 0; --i) {
      const std::uint64_t f = fact[static_cast<std::size_t>(i) - 1];
      const auto pick = static_cast<std::ptrdiff_t>(k / f);
      k %= f;
      p.images_.push_back(pool[static_cast<std::size_t>(pick)]);
      pool.erase(pool.begin() + pick);
    }
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  /// Advances to the lexicographically next permutation; false after the last.
  bool next() { return std::next_permutation(images_.begin(), images_.end()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// (outer o inner)(i) = outer(inner(i)).
inline Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(inner.size()));
  for (int i = 0; i < inner.size(); ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(outer(inner(i)));
  return Permutation(std::move(img));
}

}  // namespace recomb

#endif  // RECOMB_CORE_PERMUTATION_HPP
