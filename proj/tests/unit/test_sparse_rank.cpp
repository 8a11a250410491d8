#include <doctest.h>

#include "../helpers.hpp"
#include "hhh/sparse_rank.hpp"

using namespace hhh;
using namespace hhh::testing;

namespace {

SparseIntMatrix to_sparse(const std::vector<std::vector<mpz_class>>& dense, std::size_t rows) {
  SparseIntMatrix m;
  m.rows = rows;
  for (const auto& col : dense) {
    std::vector<std::pair<std::uint32_t, mpz_class>> c;
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) c.push_back({static_cast<std::uint32_t>(r), col[r]});
    m.cols.push_back(std::move(c));
  }
  return m;
}

std::size_t reference_rank(const std::vector<std::vector<mpz_class>>& dense) {
  std::vector<std::vector<Rational>> q;
  for (const auto& col : dense) {
    std::vector<Rational> row;
    for (const auto& v : col) row.push_back(Rational(v));
    q.push_back(std::move(row));
  }
  return dense_rank(q);
}

}  // namespace

TEST_SUITE("sparse_rank") {

TEST_CASE("random sparse matrices") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    std::vector<std::vector<mpz_class>> dense(cols, std::vector<mpz_class>(rows, 0));
    int density = 1 + static_cast<int>(rng() % 4);
    for (auto& col : dense)
      for (auto& v : col)
        if (static_cast<int>(rng() % 5) < density) v = static_cast<int>(rng() % 7) - 3;
    // low-rank combinations
    if (trial % 3 == 0 && cols > 2)
      for (std::size_t r = 0; r < rows; ++r) dense[cols - 1][r] = dense[0][r] * 2 - dense[1][r] * 5;
    SparseIntMatrix m = to_sparse(dense, rows);
    std::size_t want = reference_rank(dense);
    CHECK(exact_rank(m) == want);
    CHECK(exact_rank_gmp(m) == want);
  }
}

TEST_CASE("large entries force the big-integer path") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 8;
    std::vector<std::vector<mpz_class>> dense(n, std::vector<mpz_class>(n, 0));
    for (auto& col : dense)
      for (auto& v : col) {
        mpz_class big = 1;
        big <<= 40 + static_cast<int>(rng() % 20);
        v = big + static_cast<long>(rng() % 1000) - 500;
      }
    if (trial % 2)
      for (std::size_t r = 0; r < n; ++r) dense[n - 1][r] = dense[0][r] - dense[2][r] * 3;
    SparseIntMatrix m = to_sparse(dense, n);
    CHECK(exact_rank(m) == reference_rank(dense));
  }
}

TEST_CASE("degenerate shapes") {
  SparseIntMatrix empty;
  CHECK(exact_rank(empty) == 0);
  SparseIntMatrix zero_cols;
  zero_cols.rows = 3;
  zero_cols.cols.resize(4);
  CHECK(exact_rank(zero_cols) == 0);
  SparseIntMatrix id;
  id.rows = 5;
  for (std::uint32_t k = 0; k < 5; ++k) id.cols.push_back({{k, mpz_class(1)}});
  CHECK(exact_rank(id) == 5);
}

}  // TEST_SUITE
