#include "ldpclab/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldpclab {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      w_(static_cast<size_t>(rows) * ((cols + 63) / 64), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

Gf2Matrix Gf2Matrix::from_dense(const std::vector<std::vector<int>>& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Gf2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(a[r].size()) != cols)
      throw std::invalid_argument("ragged matrix");
    for (int c = 0; c < cols; ++c) {
      int v = a[r][c];
      if (v != 0 && v != 1)
        throw std::invalid_argument("matrix entry not in {0,1}");
      if (v) m.set(r, c, true);
    }
  }
  return m;
}

bool Gf2Matrix::get(int r, int c) const {
  return (w_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool v) {
  uint64_t& word = w_[static_cast<size_t>(r) * words_ + c / 64];
  uint64_t bit = uint64_t(1) << (c % 64);
  if (v)
    word |= bit;
  else
    word &= ~bit;
}

void Gf2Matrix::xor_row(int dst, int src) {
  uint64_t* d = &w_[static_cast<size_t>(dst) * words_];
  const uint64_t* s = &w_[static_cast<size_t>(src) * words_];
  for (int k = 0; k < words_; ++k) d[k] ^= s[k];
}

void Gf2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  uint64_t* pa = &w_[static_cast<size_t>(a) * words_];
  uint64_t* pb = &w_[static_cast<size_t>(b) * words_];
  for (int k = 0; k < words_; ++k) std::swap(pa[k], pb[k]);
}

std::vector<int> Gf2Matrix::row_support(int r) const {
  std::vector<int> s;
  for (int c = 0; c < cols_; ++c)
    if (get(r, c)) s.push_back(c);
  return s;
}

Gf2Matrix Gf2Matrix::submatrix(const std::vector<int>& keep_rows,
                               const std::vector<int>& keep_cols) const {
  Gf2Matrix m(static_cast<int>(keep_rows.size()),
              static_cast<int>(keep_cols.size()));
  for (size_t r = 0; r < keep_rows.size(); ++r)
    for (size_t c = 0; c < keep_cols.size(); ++c)
      if (get(keep_rows[r], keep_cols[c])) m.set(static_cast<int>(r),
                                                 static_cast<int>(c), true);
  return m;
}

void Gf2Matrix::append_unit_row(int c) {
  w_.resize(w_.size() + words_, 0);
  ++rows_;
  set(rows_ - 1, c, true);
}

int rank_gf2(Gf2Matrix a) {
  int rank = 0;
  int rows = a.rows(), cols = a.cols();
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(rank, pivot);
    for (int r = 0; r < rows; ++r)
      if (r != rank && a.get(r, col)) a.xor_row(r, rank);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> codeword_basis(const Gf2Matrix& h) {
  Gf2Matrix a = h;
  int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;          // pivot column of each pivot row
  std::vector<int> pivot_row_of(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(rank, pivot);
    for (int r = 0; r < rows; ++r)
      if (r != rank && a.get(r, col)) a.xor_row(r, rank);
    pivot_col.push_back(col);
    pivot_row_of[col] = rank;
    ++rank;
  }
  std::vector<std::vector<int>> basis;
  for (int col = 0; col < cols; ++col) {
    if (pivot_row_of[col] >= 0) continue;  // pivot column, not free
    std::vector<int> support;
    support.push_back(col);
    for (int r = 0; r < rank; ++r)
      if (a.get(r, col)) support.push_back(pivot_col[r]);
    std::sort(support.begin(), support.end());
    basis.push_back(std::move(support));
  }
  return basis;
}

}  // namespace ldpclab
