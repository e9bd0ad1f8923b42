#include "twistlab/bit_matrix.hpp"

#include <bit>

#include "twistlab/error.hpp"

namespace twistlab::linalg {

namespace {

std::size_t word_count(std::size_t cols) { return (cols + 63) / 64; }

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(word_count(cols)), data_(rows * words_, 0) {}

BitMatrix::BitMatrix(const GfMatrix& other) : BitMatrix(other.rows(), other.cols()) {
  if (other.prime() != 2) throw Error(ErrorCode::InvalidArgument, "BitMatrix needs p = 2");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (other.get(i, j) & 1u) set(i, j, 1);
    }
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shapes");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Word* dst = out.data_.data() + i * out.words_;
    const Word* src = data_.data() + i * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = src[w];
      while (bits) {
        std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const Word* rhs = other.data_.data() + k * other.words_;
        for (std::size_t x = 0; x < out.words_; ++x) dst[x] ^= rhs[x];
      }
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& other) const {
  BitMatrix out = *this;
  out.add_scaled(other, 1);
  return out;
}

BitMatrix& BitMatrix::add_scaled(const BitMatrix& other, Entry c) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix sum shapes");
  }
  if ((c & 1u) == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

BitMatrix& BitMatrix::add_scaled_block(const BitMatrix& other, Entry c, std::size_t col_offset) {
  if (other.rows_ > rows_ || col_offset + other.cols_ > cols_) {
    throw Error(ErrorCode::SizeMismatch, "block does not fit");
  }
  if ((c & 1u) == 0) return *this;
  if (col_offset % 64 == 0) {
    std::size_t base = col_offset / 64;
    for (std::size_t i = 0; i < other.rows_; ++i) {
      for (std::size_t w = 0; w < other.words_; ++w) {
        data_[i * words_ + base + w] ^= other.data_[i * other.words_ + w];
      }
    }
    return *this;
  }
  for (std::size_t i = 0; i < other.rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      if (other.get(i, j)) set(i, col_offset + j, get(i, col_offset + j) ^ 1u);
    }
  }
  return *this;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const Word* src = data_.data() + i * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      Word bits = src[w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        out.data_[j * out.words_ + i / 64] |= Word{1} << (i % 64);
      }
    }
  }
  return out;
}

std::size_t BitMatrix::rank() const {
  BitEchelon echelon(cols_);
  for (std::size_t i = 0; i < rows_; ++i) echelon.insert(row(i));
  return echelon.rank();
}

BitMatrix BitMatrix::right_nullspace() const {
  BitEchelon echelon(cols_);
  for (std::size_t i = 0; i < rows_; ++i) echelon.insert(row(i));
  return echelon.nullspace();
}

BitMatrix BitMatrix::left_nullspace() const { return transpose().right_nullspace(); }

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  BitMatrix left = *this;
  BitMatrix right = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !left.get(pivot, col)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t w = 0; w < words_; ++w) {
        std::swap(left.data_[pivot * words_ + w], left.data_[col * words_ + w]);
        std::swap(right.data_[pivot * words_ + w], right.data_[col * words_ + w]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || !left.get(i, col)) continue;
      for (std::size_t w = 0; w < words_; ++w) {
        left.data_[i * words_ + w] ^= left.data_[col * words_ + w];
        right.data_[i * words_ + w] ^= right.data_[col * words_ + w];
      }
    }
  }
  return right;
}

bool BitMatrix::is_zero() const noexcept {
  for (Word w : data_) {
    if (w) return false;
  }
  return true;
}

bool BitMatrix::is_identity() const noexcept {
  return rows_ == cols_ && *this == identity(rows_);
}

GfMatrix BitMatrix::to_gf() const {
  GfMatrix out(2, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) out.set(i, j, 1);
    }
  }
  return out;
}

BitEchelon::BitEchelon(std::size_t cols)
    : cols_(cols), words_(word_count(cols)), pivot_row_(cols, -1) {}

BitEchelon::BitEchelon(Entry p, std::size_t cols) : BitEchelon(cols) {
  if (p != 2) throw Error(ErrorCode::InvalidArgument, "BitEchelon needs p = 2");
}

void BitEchelon::reduce(std::vector<Word>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t pivot = pivots_[k];
    if (!((row[pivot / 64] >> (pivot % 64)) & 1u)) continue;
    const auto& src = rows_[k];
    for (std::size_t w = pivot / 64; w < words_; ++w) row[w] ^= src[w];
  }
}

bool BitEchelon::insert(std::span<const Word> input) {
  std::vector<Word> row(input.begin(), input.end());
  reduce(row);
  for (std::size_t w = 0; w < words_; ++w) {
    if (!row[w]) continue;
    std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(row));
    return true;
  }
  return false;
}

bool BitEchelon::contains(std::span<const Word> input) const {
  std::vector<Word> row(input.begin(), input.end());
  reduce(row);
  for (Word w : row) {
    if (w) return false;
  }
  return true;
}

BitMatrix BitEchelon::nullspace() const {
  std::vector<std::vector<Word>> rref = rows_;
  for (std::size_t k = rref.size(); k-- > 0;) {
    std::size_t pivot = pivots_[k];
    for (std::size_t other = 0; other < rref.size(); ++other) {
      if (other == k || !((rref[other][pivot / 64] >> (pivot % 64)) & 1u)) continue;
      for (std::size_t w = pivot / 64; w < words_; ++w) rref[other][w] ^= rref[k][w];
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (pivot_row_[j] < 0) free_cols.push_back(j);
  }
  BitMatrix basis(free_cols.size(), cols_);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t col = free_cols[f];
    basis.set(f, col, 1);
    for (std::size_t k = 0; k < rref.size(); ++k) {
      if ((rref[k][col / 64] >> (col % 64)) & 1u) basis.set(f, pivots_[k], 1);
    }
  }
  return basis;
}

}  // namespace twistlab::linalg
