#include "tvlab/f2_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvlab {

void add_column(F2Column& dst, const F2Column& src, F2Column& scratch) {
  scratch.clear();
  scratch.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() && b != src.end()) {
    if (*a < *b) {
      scratch.push_back(*a++);
    } else if (*b < *a) {
      scratch.push_back(*b++);
    } else {
      ++a;
      ++b;
    }
  }
  scratch.insert(scratch.end(), a, dst.end());
  scratch.insert(scratch.end(), b, src.end());
  dst.swap(scratch);
}

std::size_t SparseF2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

ColumnReduction reduce_columns(const SparseF2Matrix& m, const ReduceOptions& opts) {
  ColumnReduction out;
  out.pivot_column.assign(m.rows, -1);
  // Reduced columns are needed to keep reducing later columns; dropped at the
  // end unless requested.
  std::vector<F2Column> reduced(m.cols());
  F2Column work;
  F2Column scratch;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!opts.skip.empty() && opts.skip[j]) continue;
    work = m.columns[j];
    while (!work.empty()) {
      const std::int64_t p = out.pivot_column[work.back()];
      if (p < 0) break;
      add_column(work, reduced[static_cast<std::size_t>(p)], scratch);
    }
    if (!work.empty()) {
      out.pivot_column[work.back()] = static_cast<std::int64_t>(j);
      reduced[j] = work;
      ++out.rank;
    }
  }
  if (opts.keep_reduced) out.reduced = std::move(reduced);
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_sparse(const SparseF2Matrix& s) {
  BitMatrix m(s.rows, s.cols());
  for (std::size_t j = 0; j < s.cols(); ++j) {
    for (std::uint32_t i : s.columns[j]) m.flip(i, j);
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = data_[r * words_ + (c >> 6)];
  const std::uint64_t bit = 1ULL << (c & 63);
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t BitMatrix::rank() const {
  std::vector<std::uint64_t> a = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c >> 6;
    const std::uint64_t bit = 1ULL << (c & 63);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(a[pivot * words_ + word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    }
    const std::uint64_t* prow = &a[rank * words_];
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      std::uint64_t* row = &a[r * words_];
      if (row[word] & bit) {
        for (std::size_t w = word; w < words_; ++w) row[w] ^= prow[w];
      }
    }
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix product shape mismatch");
  BitMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = &out.data_[i * out.words_];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      const std::uint64_t* src = &o.data_[k * o.words_];
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("BitMatrix sum shape mismatch");
  BitMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] ^= o.data_[i];
  return out;
}

}  // namespace tvlab
