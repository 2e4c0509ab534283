#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "encoding.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "node_set.hpp"

namespace sierpinski {

/// Dense GF(2) matrix, row-major, 64 columns per word.
class BitMatrix {
public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + word_bits - 1) / word_bits),
        words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    check(r, c);
    return (words_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool value = true) {
    check(r, c);
    auto& w = words_[r * stride_ + c / word_bits];
    const word_type mask = word_type{1} << (c % word_bits);
    w = value ? (w | mask) : (w & ~mask);
  }

  void flip(std::size_t r, std::size_t c) {
    check(r, c);
    words_[r * stride_ + c / word_bits] ^= word_type{1} << (c % word_bits);
  }

  // row(dst) ^= row(src)
  void add_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w) words_[dst * stride_ + w] ^= words_[src * stride_ + w];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w) std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
  }

  bool row_is_zero(std::size_t r) const {
    for (std::size_t w = 0; w < stride_; ++w) {
      if (words_[r * stride_ + w] != 0) return false;
    }
    return true;
  }

  NodeSet row_support(std::size_t r) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < stride_; ++w) {
      for (word_type bits = words_[r * stride_ + w]; bits != 0; bits &= bits - 1) {
        out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    return NodeSet::from_sorted(std::move(out));
  }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("BitMatrix product: shape mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!a.get(i, k)) continue;
        for (std::size_t w = 0; w < out.stride_; ++w) {
          out.words_[i * out.stride_ + w] ^= b.words_[k * b.stride_ + w];
        }
      }
    }
    return out;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      for (std::size_t c = 0; c < m.cols_; ++c) os << (m.get(r, c) ? '1' : '0');
      os << '\n';
    }
    return os;
  }

private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw IndexError("BitMatrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<word_type> words_;
};

/// Gauss-Jordan inverse over GF(2).
///
/// On a singular input the elimination is carried to completion so that a
/// zero row can be traced back to the original rows that sum to it; the
/// highest-indexed of those is reported as the dependent row.
inline BitMatrix invert(const BitMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
  const std::size_t n = m.rows();
  BitMatrix work = m;
  BitMatrix inv = BitMatrix::identity(n);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t r = pivot_row;
    while (r < n && !work.get(r, col)) ++r;
    if (r == n) continue;
    work.swap_rows(pivot_row, r);
    inv.swap_rows(pivot_row, r);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != pivot_row && work.get(i, col)) {
        work.add_row(i, pivot_row);
        inv.add_row(i, pivot_row);
      }
    }
    ++pivot_row;
  }
  if (pivot_row < n) {
    // Rows pivot_row.. of `work` are zero; `inv` records which originals combine to them.
    auto combo = inv.row_support(pivot_row);
    throw SingularMatrixError(combo[combo.size() - 1]);
  }
  return inv;
}

/// G with G[j][i] = 1 iff i is in subtree(j), so that x = G n.
inline BitMatrix encoding_matrix(const Forest& f) {
  BitMatrix g(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    g.set(i, i);
    for (auto a : ancestors(f, i)) g.set(a, i);
  }
  return g;
}

/// Lower-triangular ones; the diagonal is included only for inclusive prefixes.
inline BitMatrix prefix_matrix(std::size_t n, Boundary boundary = Boundary::inclusive) {
  if (n == 0) throw InvalidSizeError("prefix matrix needs at least one row");
  BitMatrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t end = boundary == Boundary::inclusive ? j + 1 : j;
    for (std::size_t i = 0; i < end; ++i) a.set(j, i);
  }
  return a;
}

/// Row supports of A G^-1: the x-indices that combine to each prefix.
inline std::vector<NodeSet> parity_sets_oracle(const Forest& f,
                                               Boundary boundary = Boundary::inclusive) {
  const auto product = prefix_matrix(f.size(), boundary) * invert(encoding_matrix(f));
  std::vector<NodeSet> out;
  out.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out.push_back(product.row_support(j));
  return out;
}

} // namespace sierpinski
