#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tvlab {

/// Sparse column of a matrix over the two-element field: strictly increasing
/// row indices.
using F2Column = std::vector<std::uint32_t>;

/// dst <- dst + src (symmetric difference of sorted index lists).
void add_column(F2Column& dst, const F2Column& src, F2Column& scratch);

/// Column-major sparse matrix over the two-element field.
struct SparseF2Matrix {
  std::size_t rows = 0;
  std::vector<F2Column> columns;

  std::size_t cols() const { return columns.size(); }
  std::size_t nonzeros() const;
};

/// Outcome of left-to-right column reduction (pivot = largest row index).
struct ColumnReduction {
  std::size_t rank = 0;
  /// pivot_column[row] = column whose reduced form has that lowest entry.
  std::vector<std::int64_t> pivot_column;
  /// Reduced columns; only kept when requested.
  std::vector<F2Column> reduced;
};

struct ReduceOptions {
  /// Columns with skip[j] set are known to reduce to zero and are not touched.
  std::span<const std::uint8_t> skip{};
  bool keep_reduced = false;
};

ColumnReduction reduce_columns(const SparseF2Matrix& m, const ReduceOptions& opts = {});

/// Dense bit-packed matrix over the two-element field, row-major with 64-bit
/// words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_sparse(const SparseF2Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + (c >> 6)] ^= 1ULL << (c & 63); }

  /// Rank by Gaussian elimination on a copy.
  std::size_t rank() const;

  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix operator+(const BitMatrix& o) const;
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace tvlab
