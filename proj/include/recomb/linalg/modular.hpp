#ifndef RECOMB_LINALG_MODULAR_HPP
#define RECOMB_LINALG_MODULAR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "recomb/linalg/dense_matrix.hpp"

namespace recomb {

inline constexpr std::uint32_t kDefaultPrime = 101;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

enum class RowOutcome { absorbed, rank_increased };

struct SparseEntry {
  std::uint32_t column;
  std::uint32_t value;  // in [0, p)

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Incremental row space over F_p kept in reduced echelon form.
///
/// Accepted rows are stored only on the non-pivot ("free") columns; the pivot
/// entry is an implicit 1 and other pivot entries are implicit zeros. New
/// rows collect in a small fully reduced batch which is merged into the main
/// block with one matrix product. Entries are held in doubles, which is exact
/// because every accumulated sum stays below 2^53 for p < 2^16.
class ModularRowSpace {
 public:
  explicit ModularRowSpace(std::size_t width, std::uint32_t p = kDefaultPrime, std::size_t batch_cap = 256)
      : width_(width), p_(p), batch_cap_(std::max<std::size_t>(1, batch_cap)) {
    if (!is_prime(p) || p >= (1u << 16)) throw std::invalid_argument("modulus must be a prime below 65536");
    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) inverse_[a] = pow_mod(a, p - 2);
    free_cols_.resize(width);
    free_pos_.resize(width);
    for (std::size_t j = 0; j < width; ++j) {
      free_cols_[j] = j;
      free_pos_[j] = static_cast<std::int64_t>(j);
    }
    main_row_of_col_.assign(width, -1);
  }

  std::size_t width() const { return width_; }
  std::uint32_t prime() const { return p_; }
  std::size_t rank() const { return main_rows_ + batch_pivots_.size(); }

  std::uint32_t reduce(std::int64_t a) const {
    const std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  RowOutcome add_row(std::span<const std::int64_t> dense) {
    load_dense(dense);
    return insert_scratch();
  }

  RowOutcome add_sparse_row(std::span<const SparseEntry> row) {
    load_sparse(row);
    return insert_scratch();
  }

  bool contains_sparse(std::span<const SparseEntry> row) {
    load_sparse(row);
    reduce_by_batch();
    return first_nonzero() == npos;
  }

  bool contains(std::span<const std::int64_t> dense) {
    load_dense(dense);
    reduce_by_batch();
    return first_nonzero() == npos;
  }

  /// Merges pending rows into the main block.
  void flush() {
    if (!batch_pivots_.empty()) merge();
  }

  /// Reduced echelon basis, rows sorted by pivot column.
  std::vector<std::vector<std::uint32_t>> basis() {
    flush();
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t i = 0; i < main_rows_; ++i) order.emplace_back(main_pivot_col_[i], i);
    std::sort(order.begin(), order.end());
    std::vector<std::vector<std::uint32_t>> out;
    const std::size_t f = free_cols_.size();
    for (auto [col, i] : order) {
      std::vector<std::uint32_t> r(width_, 0);
      r[col] = 1;
      for (std::size_t k = 0; k < f; ++k) r[free_cols_[k]] = static_cast<std::uint32_t>(main_[i * f + k]);
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::uint32_t pow_mod(std::uint64_t a, std::uint32_t e) const {
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  }

  double mod(double x) const {
    const double p = p_;
    double r = x - p * std::floor(x / p);
    if (r < 0) r += p;
    if (r >= p) r -= p;
    return r;
  }

  void mod_range(double* first, std::size_t count) const {
    for (std::size_t i = 0; i < count; ++i) first[i] = mod(first[i]);
  }

  // scratch = row restricted to free columns, after eliminating main pivots
  void load_sparse(std::span<const SparseEntry> row) {
    const std::size_t f = free_cols_.size();
    scratch_.assign(f, 0.0);
    for (const auto& e : row) {
      if (e.column >= width_) throw std::out_of_range("row entry beyond width");
      if (e.value == 0) continue;
      const double a = e.value;
      const std::int64_t mr = main_row_of_col_[e.column];
      if (mr >= 0) {
        const double* src = main_.data() + static_cast<std::size_t>(mr) * f;
        for (std::size_t k = 0; k < f; ++k) scratch_[k] -= a * src[k];
      } else {
        scratch_[static_cast<std::size_t>(free_pos_[e.column])] += a;
      }
    }
    mod_range(scratch_.data(), f);
  }

  void load_dense(std::span<const std::int64_t> dense) {
    if (dense.size() != width_) throw std::invalid_argument("row has wrong width");
    const std::size_t f = free_cols_.size();
    scratch_.assign(f, 0.0);
    if (main_rows_ > 0) {
      Eigen::VectorXd coef(static_cast<Eigen::Index>(main_rows_));
      for (std::size_t i = 0; i < main_rows_; ++i) coef[static_cast<Eigen::Index>(i)] = reduce(dense[main_pivot_col_[i]]);
      Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
          main_.data(), static_cast<Eigen::Index>(main_rows_), static_cast<Eigen::Index>(f));
      Eigen::Map<Eigen::VectorXd> s(scratch_.data(), static_cast<Eigen::Index>(f));
      s.noalias() -= m.transpose() * coef;
    }
    for (std::size_t k = 0; k < f; ++k) scratch_[k] += reduce(dense[free_cols_[k]]);
    mod_range(scratch_.data(), f);
  }

  void reduce_by_batch() {
    const std::size_t f = free_cols_.size();
    const std::size_t nb = batch_pivots_.size();
    if (nb == 0) return;
    coef_.resize(nb);
    bool any = false;
    for (std::size_t b = 0; b < nb; ++b) {
      coef_[b] = scratch_[batch_pivots_[b]];
      any = any || coef_[b] != 0;
    }
    if (!any) return;
    for (std::size_t b = 0; b < nb; ++b) {
      if (coef_[b] == 0) continue;
      const double c = coef_[b];
      const double* src = batch_.data() + b * f;
      for (std::size_t k = 0; k < f; ++k) scratch_[k] -= c * src[k];
    }
    mod_range(scratch_.data(), f);
  }

  std::size_t first_nonzero() const {
    for (std::size_t k = 0; k < scratch_.size(); ++k)
      if (scratch_[k] != 0) return k;
    return npos;
  }

  RowOutcome insert_scratch() {
    reduce_by_batch();
    const std::size_t pos = first_nonzero();
    if (pos == npos) return RowOutcome::absorbed;
    const std::size_t f = free_cols_.size();
    const double inv = inverse_[static_cast<std::uint32_t>(scratch_[pos])];
    for (std::size_t k = pos; k < f; ++k) scratch_[k] = mod(scratch_[k] * inv);
    // clear the new pivot from the other batch rows
    for (std::size_t b = 0; b < batch_pivots_.size(); ++b) {
      double* dst = batch_.data() + b * f;
      const double c = dst[pos];
      if (c == 0) continue;
      for (std::size_t k = 0; k < f; ++k) dst[k] -= c * scratch_[k];
      mod_range(dst, f);
    }
    batch_.insert(batch_.end(), scratch_.begin(), scratch_.end());
    batch_pivots_.push_back(pos);
    const std::size_t limit = std::min(batch_cap_, std::max<std::size_t>(8, f / 4));
    if (batch_pivots_.size() >= limit || batch_pivots_.size() == f) merge();
    return RowOutcome::rank_increased;
  }

  void merge() {
    using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const std::size_t f = free_cols_.size();
    const std::size_t nb = batch_pivots_.size();
    const auto r = static_cast<Eigen::Index>(main_rows_);
    if (main_rows_ > 0) {
      Eigen::Map<RowMat> m(main_.data(), r, static_cast<Eigen::Index>(f));
      Eigen::Map<const RowMat> bm(batch_.data(), static_cast<Eigen::Index>(nb), static_cast<Eigen::Index>(f));
      std::vector<Eigen::Index> q(batch_pivots_.begin(), batch_pivots_.end());
      const RowMat g = m(Eigen::all, q);
      m.noalias() -= g * bm;
      mod_range(main_.data(), main_rows_ * f);
    }
    // drop the new pivot columns from every stored row (in place, forward)
    std::vector<bool> gone(f, false);
    for (auto q : batch_pivots_) gone[q] = true;
    std::vector<std::size_t> keep;
    keep.reserve(f - nb);
    for (std::size_t k = 0; k < f; ++k)
      if (!gone[k]) keep.push_back(k);
    const std::size_t nf = keep.size();
    for (std::size_t i = 0; i < main_rows_; ++i) {
      const double* src = main_.data() + i * f;
      double* dst = main_.data() + i * nf;
      for (std::size_t k = 0; k < nf; ++k) dst[k] = src[keep[k]];
    }
    main_.resize(main_rows_ * nf);
    main_.reserve((main_rows_ + nb) * nf);
    for (std::size_t b = 0; b < nb; ++b) {
      const double* src = batch_.data() + b * f;
      for (std::size_t k = 0; k < nf; ++k) main_.push_back(src[keep[k]]);
      const std::size_t col = free_cols_[batch_pivots_[b]];
      main_pivot_col_.push_back(col);
      main_row_of_col_[col] = static_cast<std::int64_t>(main_rows_ + b);
      free_pos_[col] = -1;
    }
    main_rows_ += nb;
    std::vector<std::size_t> cols;
    cols.reserve(nf);
    for (auto k : keep) cols.push_back(free_cols_[k]);
    free_cols_ = std::move(cols);
    for (std::size_t k = 0; k < nf; ++k) free_pos_[free_cols_[k]] = static_cast<std::int64_t>(k);
    batch_.clear();
    batch_pivots_.clear();
  }

  std::size_t width_;
  std::uint32_t p_;
  std::size_t batch_cap_;
  std::vector<std::uint32_t> inverse_;

  std::vector<std::size_t> free_cols_;
  std::vector<std::int64_t> free_pos_;
  std::vector<std::int64_t> main_row_of_col_;
  std::vector<std::size_t> main_pivot_col_;
  std::size_t main_rows_ = 0;
  std::vector<double> main_;

  std::vector<double> batch_;
  std::vector<std::size_t> batch_pivots_;

  std::vector<double> scratch_;
  std::vector<double> coef_;
};

/// Rank over F_p of an integer matrix.
inline std::size_t modular_rank(const DenseMatrix<std::int64_t>& m, std::uint32_t p = kDefaultPrime) {
  ModularRowSpace space(m.cols(), p);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    space.add_row(m.row(i));
    if (space.rank() == m.cols()) break;
  }
  return space.rank();
}

}  // namespace recomb

#endif  // RECOMB_LINALG_MODULAR_HPP
