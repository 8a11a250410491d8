#pragma once

// Brute-force graded homology of free complexes over polynomial rings.

#include <cstddef>
#include <string>
#include <vector>

#include "hhh/mf.hpp"
#include "hhh/series.hpp"

namespace hhh {

/// Free module on generators g_k of the given degrees with d(g) = sum p * g'.
/// The differential has degree t^1.
struct FreeComplex {
  RegistryPtr reg;
  std::vector<TriDegree> degrees;
  std::vector<std::vector<std::pair<std::size_t, Poly>>> d;
};

/// The complex of a factorization over a free base: generators theta_S.
FreeComplex koszul_complex(const KoszulFactorization& K);

struct OracleOptions {
  int jobs = 1;
  /// Rewrites x in difference coordinates, factors out variables absent from
  /// the differential and splits slices by every grading the differential respects.
  bool reduce = true;
  std::size_t max_slice = 4'000'000;
};

struct OracleStats {
  std::size_t columns = 0;
  std::size_t matrices = 0;
  std::size_t max_dim = 0;
  std::size_t total_dim = 0;
  std::vector<std::string> inert;
  std::size_t extra_gradings = 0;
};

/// dim ker - dim im per tridegree on `w`, t being the homological degree.
DimTable free_complex_homology(const FreeComplex& C, const Window& w, const OracleOptions& opts = {},
                               OracleStats* stats = nullptr);

DimTable bidegree_homology(const KoszulFactorization& K, const Window& w, const OracleOptions& opts = {},
                           OracleStats* stats = nullptr);

/// Chain-group dimensions per tridegree (no reductions).
DimTable chain_dimensions(const FreeComplex& C, const Window& w);

/// Checks that consecutive slice matrices compose to zero on `w`.
bool slice_d_squared_zero(const FreeComplex& C, const Window& w);

enum class ExplicitComplex { P2, sP2, wP3 };

/// The periodic complexes over Q[x] with generators up to homological degree tmax.
FreeComplex explicit_complex(ExplicitComplex which, int tmax);
DimTable explicit_complex_homology(ExplicitComplex which, const Window& w, const OracleOptions& opts = {});

struct Mismatch {
  TriDegree degree;
  long long expected = 0;
  long long actual = 0;
};

struct CompareReport {
  bool pass = true;
  Window window;
  std::size_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first 10
};

CompareReport compare_tables(const DimTable& expected, const DimTable& actual, const Window& w);
CompareReport compare(const DimTable& table, const PoincareSeries& series, const Window& w);

}  // namespace hhh
