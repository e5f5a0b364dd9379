#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kindex {

/// Compressed-row matrix of non-negative integer weights.
///
/// Only strictly positive entries are stored; an absent entry reads as zero.
/// Column indices within a row are strictly increasing. Dimensions are fixed
/// at construction.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    std::int64_t weight;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  struct Triplet {
    std::size_t row;
    std::size_t col;
    std::int64_t weight;

    friend bool operator==(const Triplet&, const Triplet&) = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate coordinates are summed and zero weights dropped. Throws
  /// std::out_of_range for a coordinate outside the dimensions and
  /// std::invalid_argument for a negative weight.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  std::int64_t at(std::size_t row, std::size_t col) const;
  bool contains(std::size_t row, std::size_t col) const { return at(row, col) > 0; }

  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }
  std::size_t row_nnz(std::size_t r) const { return offsets_[r + 1] - offsets_[r]; }
  std::int64_t row_sum(std::size_t r) const;

  /// Number of stored entries per column.
  std::vector<std::size_t> col_nnz() const;

  SparseMatrix transpose() const;
  bool is_binary() const;
  std::vector<Triplet> triplets() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

/// Heaviside binarization: every stored entry becomes 1.
SparseMatrix theta(const SparseMatrix& weighted);

/// Matrix product. Throws std::invalid_argument on a dimension mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Entry-wise product. Throws std::invalid_argument on a dimension mismatch.
SparseMatrix elementwise_product(const SparseMatrix& a, const SparseMatrix& b);

/// Debug dump as `row,col,weight` lines with a header. Labels replace indices
/// when given (their sizes must match the dimensions).
void write_matrix_csv(std::ostream& out, const SparseMatrix& m, std::span<const std::string> row_labels = {},
                      std::span<const std::string> col_labels = {});

}  // namespace kindex
