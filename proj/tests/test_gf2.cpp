#include <doctest.h>

#include <vector>

#include "ldpclab/gf2.hpp"
#include "ldpclab/rng.hpp"
#include "support/naive.hpp"

using namespace ldpclab;

namespace {

std::vector<std::vector<int>> random_dense(int rows, int cols, double p,
                                           CounterRng& rng) {
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
  for (auto& row : a)
    for (auto& x : row) x = rng.u01() < p ? 1 : 0;
  return a;
}

bool satisfies_all(const std::vector<std::vector<int>>& h,
                   const std::vector<int>& support) {
  for (const auto& row : h) {
    int parity = 0;
    for (int c : support) parity ^= row[c];
    if (parity) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("single parity check: rank 1, basis size 2") {
  auto h = Gf2Matrix::from_dense({{1, 1, 1}});
  CHECK(rank_gf2(h) == 1);
  auto basis = codeword_basis(h);
  CHECK(basis.size() == 2);
}

TEST_CASE("repetition chain: rank 2, basis = all-ones") {
  auto h = Gf2Matrix::from_dense({{1, 1, 0}, {0, 1, 1}});
  CHECK(rank_gf2(h) == 2);
  auto basis = codeword_basis(h);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("rank matches the independent elimination oracle") {
  CounterRng rng(101, 0);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 3 + static_cast<int>(rng.below(10));
    int cols = 3 + static_cast<int>(rng.below(18));
    auto dense = random_dense(rows, cols, 0.4, rng);
    CHECK(rank_gf2(Gf2Matrix::from_dense(dense)) == naive::rank_dense(dense));
  }
}

TEST_CASE("basis vectors satisfy every check; |basis| + rank = n") {
  CounterRng rng(102, 0);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(10));
    int cols = 2 + static_cast<int>(rng.below(16));
    auto dense = random_dense(rows, cols, 0.35, rng);
    auto h = Gf2Matrix::from_dense(dense);
    int r = rank_gf2(h);
    auto basis = codeword_basis(h);
    CHECK(static_cast<int>(basis.size()) + r == cols);
    for (const auto& v : basis) CHECK(satisfies_all(dense, v));
  }
}

TEST_CASE("deleting rows and columns never raises the rank") {
  CounterRng rng(103, 0);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 4 + static_cast<int>(rng.below(8));
    int cols = 4 + static_cast<int>(rng.below(12));
    auto dense = random_dense(rows, cols, 0.4, rng);
    auto h = Gf2Matrix::from_dense(dense);
    int full_rank = rank_gf2(h);
    std::vector<int> keep_rows, keep_cols;
    for (int r = 0; r < rows; ++r)
      if (rng.u01() < 0.7) keep_rows.push_back(r);
    for (int c = 0; c < cols; ++c)
      if (rng.u01() < 0.7) keep_cols.push_back(c);
    CHECK(rank_gf2(h.submatrix(keep_rows, keep_cols)) <= full_rank);
  }
}

TEST_CASE("entries outside {0,1} are rejected") {
  CHECK_THROWS_AS(Gf2Matrix::from_dense({{1, 2, 0}}), std::invalid_argument);
}
