#pragma once

// Exact rank of sparse integer matrices by fraction-free elimination.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hhh {

struct SparseIntMatrix {
  std::size_t rows = 0;
  /// Column k: (row, value) pairs with distinct rows and nonzero values.
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> cols;
};

/// Exact rank. Runs in 64-bit arithmetic and restarts with GMP on overflow.
std::size_t exact_rank(const SparseIntMatrix& m);

/// Rank with GMP arithmetic throughout (reference path).
std::size_t exact_rank_gmp(const SparseIntMatrix& m);

}  // namespace hhh
