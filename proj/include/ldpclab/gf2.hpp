#pragma once

#include <cstdint>
#include <vector>

namespace ldpclab {

// Dense GF(2) matrix with rows packed into 64-bit words.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols);

  // Entries must be 0 or 1; anything else is rejected.
  static Gf2Matrix from_dense(const std::vector<std::vector<int>>& a);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);

  std::vector<int> row_support(int r) const;

  // Keeps the listed rows/columns (indices into the original matrix).
  Gf2Matrix submatrix(const std::vector<int>& keep_rows,
                      const std::vector<int>& keep_cols) const;

  // Appends a row with a single 1 in column c (used to pin a variable).
  void append_unit_row(int c);

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> w_;
};

int rank_gf2(Gf2Matrix a);

// Basis of the null space {x : H x = 0}, one support list per basis vector.
// Size is always cols - rank.
std::vector<std::vector<int>> codeword_basis(const Gf2Matrix& h);

}  // namespace ldpclab
