#include "linkmu/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace linkmu {

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

int BitVector::popcount() const {
  int n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

BitVector BitVector::from_bits(const std::vector<std::uint8_t>& bits) {
  BitVector v(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1u) v.set(static_cast<int>(i));
  return v;
}

std::vector<std::uint8_t> BitVector::to_bits() const {
  std::vector<std::uint8_t> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

GF2Matrix::GF2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(std::size_t(rows) * wpr_, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<std::uint8_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  GF2Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j)
      if (rows[i][j] & 1u) m.set(i, j);
  }
  return m;
}

void GF2Matrix::set(int r, int c, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  auto& w = row(r)[c >> 6];
  w = v ? (w | mask) : (w & ~mask);
}

BitVector GF2Matrix::multiply(const BitVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  BitVector out(rows_);
  const auto vw = v.words();
  for (int r = 0; r < rows_; ++r) {
    const auto rw = row(r);
    std::uint64_t acc = 0;
    for (int k = 0; k < wpr_; ++k) acc ^= rw[k] & vw[k];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

namespace {

inline void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, int from,
                      int to) {
  for (int k = from; k < to; ++k) dst[k] ^= src[k];
}

}  // namespace

RowEchelon row_reduce(const GF2Matrix& m) {
  RowEchelon out{m, {}};
  GF2Matrix& a = out.reduced;
  const int wpr = a.words_per_row();
  int pivot_row = 0;
  for (int c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    int found = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (a.get(r, c)) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      auto x = a.row(found), y = a.row(pivot_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const auto prow = a.row(pivot_row);
    for (int r = 0; r < a.rows(); ++r) {
      if (r != pivot_row && a.get(r, c)) xor_words(a.row(r), prow, c >> 6, wpr);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

int rank(const GF2Matrix& m) {
  GF2Matrix a = m;
  const int rows = a.rows();
  const int wpr = a.words_per_row();
  // last nonzero word of each row, -1 when the row is zero
  std::vector<int> last(rows, -1);
  for (int r = 0; r < rows; ++r) {
    const auto w = a.row(r);
    for (int k = wpr - 1; k >= 0; --k) {
      if (w[k]) {
        last[r] = k;
        break;
      }
    }
  }
  int pivot_row = 0;
  for (int c = 0; c < a.cols() && pivot_row < rows; ++c) {
    const int word = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (a.row(r)[word] & mask) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) {
      auto x = a.row(found), y = a.row(pivot_row);
      std::swap_ranges(x.begin() + word, x.end(), y.begin() + word);
      std::swap(last[found], last[pivot_row]);
    }
    const auto prow = a.row(pivot_row);
    const int end = last[pivot_row] + 1;
    for (int r = found + 1; r < rows; ++r) {
      auto rw = a.row(r);
      if (rw[word] & mask) {
        xor_words(rw, prow, word, end);
        if (end - 1 >= last[r]) {
          int k = std::max(end - 1, last[r]);
          while (k >= 0 && rw[k] == 0) --k;
          last[r] = k;
        }
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<BitVector> null_space_basis(const GF2Matrix& m) {
  const auto ech = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : ech.pivots) is_pivot[p] = 1;
  std::vector<BitVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v.set(f);
    for (int i = 0; i < static_cast<int>(ech.pivots.size()); ++i)
      if (ech.reduced.get(i, f)) v.set(ech.pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace linkmu
