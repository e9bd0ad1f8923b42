#include "twistlab/gf_matrix.hpp"

#include <sstream>

#include "twistlab/error.hpp"

namespace twistlab::linalg {

Entry PrimeField::inv(Entry a) const {
  if (a % p == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  // Fermat: a^(p-2).
  Entry result = 1;
  Entry base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GfMatrix::GfMatrix(Entry p, std::size_t rows, std::size_t cols)
    : field_{p}, rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "field characteristic must be at least 2");
}

GfMatrix GfMatrix::identity(Entry p, std::size_t n) {
  GfMatrix out(p, n, n);
  for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1;
  return out;
}

namespace {

void require_same_field(const GfMatrix& a, const GfMatrix& b) {
  if (a.prime() != b.prime()) throw Error(ErrorCode::SizeMismatch, "matrices over different fields");
}

}  // namespace

GfMatrix GfMatrix::operator*(const GfMatrix& other) const {
  require_same_field(*this, other);
  if (cols_ != other.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shapes");
  GfMatrix out(field_.p, rows_, other.cols_);
  const std::uint64_t p = field_.p;
  // Accumulate in 64 bits and reduce once per row when entries are small.
  std::vector<std::uint64_t> acc(other.cols_);
  const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      const Entry* b = other.data_.data() + k * other.cols_;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        acc[j] += a * b[j];
        if (acc[j] >= limit) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < other.cols_; ++j) out.data_[i * other.cols_ + j] = acc[j] % p;
  }
  return out;
}

GfMatrix GfMatrix::operator+(const GfMatrix& other) const {
  GfMatrix out = *this;
  out.add_scaled(other, 1);
  return out;
}

GfMatrix GfMatrix::operator-(const GfMatrix& other) const {
  GfMatrix out = *this;
  out.add_scaled(other, field_.p - 1);
  return out;
}

GfMatrix& GfMatrix::add_scaled(const GfMatrix& other, Entry c) {
  require_same_field(*this, other);
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix sum shapes");
  }
  c %= field_.p;
  if (c == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] = field_.add(data_[i], field_.mul(c, other.data_[i]));
  }
  return *this;
}

GfMatrix& GfMatrix::add_scaled_block(const GfMatrix& other, Entry c, std::size_t col_offset) {
  require_same_field(*this, other);
  if (other.rows_ > rows_ || col_offset + other.cols_ > cols_) {
    throw Error(ErrorCode::SizeMismatch, "block does not fit");
  }
  c %= field_.p;
  if (c == 0) return *this;
  for (std::size_t i = 0; i < other.rows_; ++i) {
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Entry& dst = data_[i * cols_ + col_offset + j];
      dst = field_.add(dst, field_.mul(c, other.data_[i * other.cols_ + j]));
    }
  }
  return *this;
}

GfMatrix GfMatrix::scaled(Entry c) const {
  GfMatrix out(field_.p, rows_, cols_);
  out.add_scaled(*this, c);
  return out;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix out(field_.p, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return out;
}

std::size_t GfMatrix::rank() const {
  GfEchelon echelon(field_.p, cols_);
  for (std::size_t i = 0; i < rows_; ++i) echelon.insert(row(i));
  return echelon.rank();
}

GfMatrix GfMatrix::right_nullspace() const {
  GfEchelon echelon(field_.p, cols_);
  for (std::size_t i = 0; i < rows_; ++i) echelon.insert(row(i));
  return echelon.nullspace();
}

GfMatrix GfMatrix::left_nullspace() const { return transpose().right_nullspace(); }

std::optional<GfMatrix> GfMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  // Gauss-Jordan on [A | I].
  GfMatrix work(field_.p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work.data_[i * 2 * n + j] = data_[i * n + j];
    work.data_[i * 2 * n + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.get(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < 2 * n; ++j) {
        std::swap(work.data_[pivot * 2 * n + j], work.data_[col * 2 * n + j]);
      }
    }
    Entry scale = field_.inv(work.get(col, col));
    for (std::size_t j = 0; j < 2 * n; ++j) {
      work.data_[col * 2 * n + j] = field_.mul(work.data_[col * 2 * n + j], scale);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Entry factor = work.get(i, col);
      if (factor == 0) continue;
      Entry minus = field_.neg(factor);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        Entry& dst = work.data_[i * 2 * n + j];
        dst = field_.add(dst, field_.mul(minus, work.data_[col * 2 * n + j]));
      }
    }
  }
  GfMatrix out(field_.p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] = work.get(i, n + j);
  }
  return out;
}

bool GfMatrix::is_zero() const noexcept {
  for (Entry x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool GfMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::string GfMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << get(i, j);
    out << '\n';
  }
  return out.str();
}

GfEchelon::GfEchelon(Entry p, std::size_t cols)
    : field_{p}, cols_(cols), pivot_row_(cols, -1) {}

void GfEchelon::reduce(std::vector<Entry>& row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Entry factor = row[pivots_[k]];
    if (factor == 0) continue;
    Entry minus = field_.neg(factor);
    const auto& pivot = rows_[k];
    for (std::size_t j = pivots_[k]; j < cols_; ++j) {
      if (pivot[j] != 0) row[j] = field_.add(row[j], field_.mul(minus, pivot[j]));
    }
  }
}

bool GfEchelon::insert(std::span<const Entry> input) {
  std::vector<Entry> row(input.begin(), input.end());
  reduce(row);
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  Entry scale = field_.inv(row[lead]);
  for (std::size_t j = lead; j < cols_; ++j) row[j] = field_.mul(row[j], scale);
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

bool GfEchelon::contains(std::span<const Entry> input) const {
  std::vector<Entry> row(input.begin(), input.end());
  reduce(row);
  for (Entry x : row) {
    if (x != 0) return false;
  }
  return true;
}

GfMatrix GfEchelon::nullspace() const {
  // Back-substitute to reduced row echelon form, then read off one basis
  // vector per free column.
  std::vector<std::vector<Entry>> rref = rows_;
  for (std::size_t k = rref.size(); k-- > 0;) {
    for (std::size_t other = 0; other < rref.size(); ++other) {
      if (other == k) continue;
      Entry factor = rref[other][pivots_[k]];
      if (factor == 0) continue;
      Entry minus = field_.neg(factor);
      for (std::size_t j = pivots_[k]; j < cols_; ++j) {
        if (rref[k][j] != 0) rref[other][j] = field_.add(rref[other][j], field_.mul(minus, rref[k][j]));
      }
    }
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (pivot_row_[j] < 0) free_cols.push_back(j);
  }
  GfMatrix basis(field_.p, free_cols.size(), cols_);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t col = free_cols[f];
    basis.set(f, col, 1);
    for (std::size_t k = 0; k < rref.size(); ++k) {
      basis.set(f, pivots_[k], field_.neg(rref[k][col]));
    }
  }
  return basis;
}

}  // namespace twistlab::linalg
