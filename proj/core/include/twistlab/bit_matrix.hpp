#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twistlab/gf_matrix.hpp"

namespace twistlab::linalg {

/// Dense matrix over Z/2 with rows packed 64 entries to a word. Mirrors the
/// GfMatrix interface so algorithms can be written once for both.
class BitMatrix {
 public:
  using Word = std::uint64_t;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Entries are taken mod 2; throws unless other.prime() == 2.
  explicit BitMatrix(const GfMatrix& other);

  static BitMatrix identity(std::size_t n);

  Entry prime() const noexcept { return 2; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_; }

  Entry get(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j, Entry v) noexcept {
    Word mask = Word{1} << (j % 64);
    Word& w = data_[i * words_ + j / 64];
    w = (v & 1u) ? (w | mask) : (w & ~mask);
  }
  std::span<Word> row(std::size_t i) noexcept { return {data_.data() + i * words_, words_}; }
  std::span<const Word> row(std::size_t i) const noexcept {
    return {data_.data() + i * words_, words_};
  }

  BitMatrix operator*(const BitMatrix& other) const;
  BitMatrix operator+(const BitMatrix& other) const;
  BitMatrix operator-(const BitMatrix& other) const { return *this + other; }
  BitMatrix& add_scaled(const BitMatrix& other, Entry c);
  BitMatrix& add_scaled_block(const BitMatrix& other, Entry c, std::size_t col_offset);
  BitMatrix transpose() const;

  std::size_t rank() const;
  BitMatrix left_nullspace() const;
  BitMatrix right_nullspace() const;
  std::optional<BitMatrix> inverse() const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  GfMatrix to_gf() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

class BitEchelon {
 public:
  using Word = BitMatrix::Word;

  explicit BitEchelon(std::size_t cols);
  BitEchelon(Entry p, std::size_t cols);

  bool insert(std::span<const Word> row);
  void reduce(std::vector<Word>& row) const;
  bool contains(std::span<const Word> row) const;
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  BitMatrix nullspace() const;

 private:
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::vector<Word>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;
};

}  // namespace twistlab::linalg
