#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistlab::linalg {

using Entry = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^31.
struct PrimeField {
  Entry p = 2;

  Entry add(Entry a, Entry b) const noexcept {
    Entry s = a + b;
    return s >= p ? s - p : s;
  }
  Entry sub(Entry a, Entry b) const noexcept { return a >= b ? a - b : a + p - b; }
  Entry neg(Entry a) const noexcept { return a == 0 ? 0 : p - a; }
  Entry mul(Entry a, Entry b) const noexcept {
    return static_cast<Entry>((std::uint64_t{a} * b) % p);
  }
  Entry inv(Entry a) const;
  Entry reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<Entry>(r < 0 ? r + p : r);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

/// Dense matrix over Z/p, row major. Vectors are rows, and a module acts on
/// the right: v -> v * rho(g).
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(Entry p, std::size_t rows, std::size_t cols);

  static GfMatrix identity(Entry p, std::size_t n);

  Entry prime() const noexcept { return field_.p; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry get(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Entry v) noexcept { data_[i * cols_ + j] = v % field_.p; }
  std::span<Entry> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Entry> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  GfMatrix operator*(const GfMatrix& other) const;
  GfMatrix operator+(const GfMatrix& other) const;
  GfMatrix operator-(const GfMatrix& other) const;
  /// this += c * other
  GfMatrix& add_scaled(const GfMatrix& other, Entry c);
  /// Adds c * other into the block whose top-left corner is (0, col_offset).
  GfMatrix& add_scaled_block(const GfMatrix& other, Entry c, std::size_t col_offset);
  GfMatrix scaled(Entry c) const;
  GfMatrix transpose() const;

  std::size_t rank() const;
  /// Rows form a basis of {x : x * this = 0}.
  GfMatrix left_nullspace() const;
  /// Rows form a basis of {x : this * x^T = 0}.
  GfMatrix right_nullspace() const;
  std::optional<GfMatrix> inverse() const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  std::string to_string() const;

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  PrimeField field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

/// Incrementally maintained row echelon form. Rows are kept reduced against
/// each other's pivots, so reducing a new row touches each pivot once.
class GfEchelon {
 public:
  GfEchelon(Entry p, std::size_t cols);

  /// Returns true if the row was independent of those already inserted.
  bool insert(std::span<const Entry> row);
  /// Reduces in place; the result is zero iff the row lies in the span.
  void reduce(std::vector<Entry>& row) const;
  bool contains(std::span<const Entry> row) const;
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  /// Basis of the right null space of the inserted rows.
  GfMatrix nullspace() const;

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_row_;  // column -> row index or -1
};

}  // namespace twistlab::linalg
