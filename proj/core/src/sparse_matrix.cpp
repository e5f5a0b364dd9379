#include "kindex/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "csv.hpp"

namespace kindex {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), offsets_(rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range(fmt::format("entry ({}, {}) outside {}x{} matrix", t.row, t.col, rows, cols));
    }
    if (t.weight < 0) throw std::invalid_argument("sparse matrix weights must be non-negative");
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });

  SparseMatrix m(rows, cols);
  m.entries_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    std::size_t j = i;
    std::int64_t sum = 0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row && triplets[j].col == triplets[i].col) {
      sum += triplets[j].weight;
      ++j;
    }
    if (sum > 0) {
      m.entries_.push_back({triplets[i].col, sum});
      ++m.offsets_[triplets[i].row + 1];
    }
    i = j;
  }
  for (std::size_t r = 0; r < rows; ++r) m.offsets_[r + 1] += m.offsets_[r];
  return m;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range(fmt::format("index ({}, {}) outside {}x{} matrix", r, c, rows_, cols_));
  auto entries = row(r);
  auto it = std::lower_bound(entries.begin(), entries.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != entries.end() && it->col == c) ? it->weight : 0;
}

std::int64_t SparseMatrix::row_sum(std::size_t r) const {
  std::int64_t sum = 0;
  for (const auto& e : row(r)) sum += e.weight;
  return sum;
}

std::vector<std::size_t> SparseMatrix::col_nnz() const {
  std::vector<std::size_t> counts(cols_, 0);
  for (const auto& e : entries_) ++counts[e.col];
  return counts;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  t.entries_.resize(entries_.size());
  for (const auto& e : entries_) ++t.offsets_[e.col + 1];
  for (std::size_t c = 0; c < cols_; ++c) t.offsets_[c + 1] += t.offsets_[c];
  std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  // Rows are visited in increasing order, so each transposed row comes out sorted.
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) t.entries_[cursor[e.col]++] = {r, e.weight};
  }
  return t;
}

bool SparseMatrix::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.weight == 1; });
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) out.push_back({r, e.col, e.weight});
  }
  return out;
}

SparseMatrix theta(const SparseMatrix& weighted) {
  auto triplets = weighted.triplets();
  for (auto& t : triplets) t.weight = 1;
  return SparseMatrix::from_triplets(weighted.rows(), weighted.cols(), std::move(triplets));
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(
        fmt::format("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
  }
  // Row-by-row accumulation with a dense scratch row (Gustavson).
  std::vector<SparseMatrix::Triplet> out;
  std::vector<std::int64_t> acc(b.cols(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        if (acc[eb.col] == 0) touched.push_back(eb.col);
        acc[eb.col] += ea.weight * eb.weight;
      }
    }
    for (auto c : touched) {
      out.push_back({r, c, acc[c]});
      acc[c] = 0;
    }
    touched.clear();
  }
  return SparseMatrix::from_triplets(a.rows(), b.cols(), std::move(out));
}

SparseMatrix elementwise_product(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(
        fmt::format("shape mismatch {}x{} vs {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
  }
  std::vector<SparseMatrix::Triplet> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto ra = a.row(r);
    auto rb = b.row(r);
    auto ia = ra.begin();
    auto ib = rb.begin();
    while (ia != ra.end() && ib != rb.end()) {
      if (ia->col < ib->col) {
        ++ia;
      } else if (ib->col < ia->col) {
        ++ib;
      } else {
        out.push_back({r, ia->col, ia->weight * ib->weight});
        ++ia;
        ++ib;
      }
    }
  }
  return SparseMatrix::from_triplets(a.rows(), a.cols(), std::move(out));
}

void write_matrix_csv(std::ostream& out, const SparseMatrix& m, std::span<const std::string> row_labels,
                      std::span<const std::string> col_labels) {
  if (!row_labels.empty() && row_labels.size() != m.rows()) throw std::invalid_argument("row label count mismatch");
  if (!col_labels.empty() && col_labels.size() != m.cols()) throw std::invalid_argument("column label count mismatch");
  out << "row,col,weight\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) {
      csv::write_row(out, {row_labels.empty() ? std::to_string(r) : row_labels[r],
                           col_labels.empty() ? std::to_string(e.col) : col_labels[e.col], std::to_string(e.weight)});
    }
  }
}

}  // namespace kindex
