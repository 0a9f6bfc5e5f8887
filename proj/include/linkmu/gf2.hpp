#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace linkmu {

/// Dense vector over the two-element field, one bit per coordinate.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    words_[i >> 6] = v ? (words_[i >> 6] | m) : (words_[i >> 6] & ~m);
  }
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVector& operator^=(const BitVector& o);
  bool any() const;
  int popcount() const;
  std::span<const std::uint64_t> words() const { return words_; }

  static BitVector from_bits(const std::vector<std::uint8_t>& bits);
  std::vector<std::uint8_t> to_bits() const;

  bool operator==(const BitVector&) const = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major bit-packed matrix over the two-element field. Padding bits past
/// cols() in each row are always zero.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols);

  static GF2Matrix identity(int n);
  static GF2Matrix from_rows(const std::vector<std::vector<std::uint8_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c, bool v = true);
  void flip(int r, int c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

  std::span<std::uint64_t> row(int r) { return {bits_.data() + std::size_t(r) * wpr_, std::size_t(wpr_)}; }
  std::span<const std::uint64_t> row(int r) const {
    return {bits_.data() + std::size_t(r) * wpr_, std::size_t(wpr_)};
  }

  /// this * v for a column vector v of length cols().
  BitVector multiply(const BitVector& v) const;

  bool operator==(const GF2Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct RowEchelon {
  GF2Matrix reduced;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

/// Reduced row-echelon form. For each column, left to right, the first row at
/// or below the current pivot row with a 1 becomes the pivot; it is XORed into
/// every other row holding a 1 in that column, above and below.
RowEchelon row_reduce(const GF2Matrix& m);

/// Rank by forward elimination only. Each XOR touches just the word span of
/// the pivot row's nonzero entries, so banded matrices stay cheap.
int rank(const GF2Matrix& m);

inline int nullity(const GF2Matrix& m) { return m.cols() - rank(m); }

/// Kernel basis read off the RREF: one vector per free column.
std::vector<BitVector> null_space_basis(const GF2Matrix& m);

}  // namespace linkmu
