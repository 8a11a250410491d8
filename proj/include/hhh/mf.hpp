#pragma once

// Koszul matrix factorizations, their moves, and the dg-module picture.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhh/groebner.hpp"
#include "hhh/permutation.hpp"
#include "hhh/poly.hpp"

namespace hhh {

using QuotientPtr = std::shared_ptr<const Quotient>;

/// Row (a | b) with odd generator theta_label of degree `shift`:
/// d(theta) = b and theta contributes a * theta to d(1).
/// Homogeneity: deg a = t - shift, deg b = shift + t.
struct KoszulRow {
  Poly a;
  Poly b;
  TriDegree shift;
  int label = 0;
};

struct KoszulFactorization {
  QuotientPtr base;
  std::vector<KoszulRow> rows;
  TriDegree global_shift;

  const RegistryPtr& registry() const { return base->registry(); }
};

inline constexpr TriDegree kTheta{-2, 1, 0};
inline constexpr TriDegree kDiff{0, 1, 0};

QuotientPtr free_quotient(const RegistryPtr& reg);
/// (e_k(y) - e_k(x) : 1 <= k <= n) over `reg` (default x,y,u registry).
Ideal In_ideal(int n, const RegistryPtr& reg);
/// Q[x,y,u]/I_n, shared per n.
QuotientPtr In_quotient(int n);

/// Checks row degrees; throws degree-mismatch on violation.
void check_row(const KoszulRow& row);

/// sum a_i b_i reduced in the base.
Poly potential(const KoszulFactorization& K);

KoszulFactorization row_transform(const KoszulFactorization& K, int i, int j, const Poly& lambda);
KoszulFactorization scale_row(const KoszulFactorization& K, int i, const Rational& lambda);
/// Removes a row (0 | c*var - p) and substitutes var -> p/c elsewhere.
KoszulFactorization exclude_variable(const KoszulFactorization& K, int row, const std::string& var);
/// Replaces entries that vanish in the base ring by a literal zero.
KoszulFactorization drop_zero_entries(const KoszulFactorization& K);

/// Rows (y_{w(j)} - x_j | b_j) over Q[x,y,u]/I_n with global shift q^{-n(n-1)}.
KoszulFactorization build_Mn(int n, const std::optional<Permutation>& twist = std::nullopt);

/// One move of a reduction trace.
struct MoveRecord {
  std::string move;
  std::map<std::string, std::string> params;
  KoszulFactorization result;
  Poly potential;
};

/// The reduction of M_n to the form over S/(u1): subtract row 1 from the
/// others, zero the vanishing entries and exclude u1.
std::vector<MoveRecord> mf_simplify(int n, const std::optional<Permutation>& twist = std::nullopt);

// ---------------------------------------------------------------- dg modules

/// Bit k set means the odd generator of row k is present (ordered by row).
using ThetaSet = std::uint32_t;
using ModuleElement = std::map<ThetaSet, Poly>;

struct DgModule {
  QuotientPtr base;
  std::vector<int> labels;  // theta labels, row order
  std::vector<Poly> dA;     // d(theta_k)
  std::vector<Poly> dM;     // coefficient of theta_k in d(1)
  TriDegree unit_shift;

  std::size_t rank() const { return labels.size(); }
  /// d(theta_S 1) = d_A(theta_S) 1 + (-1)^{|S|} theta_S d(1).
  ModuleElement d_generator(ThetaSet S) const;
  ModuleElement d(const ModuleElement& m) const;
  /// Reduces coefficients in the base and drops zeros.
  ModuleElement reduce(const ModuleElement& m) const;
};

DgModule to_dg_module(const KoszulFactorization& K);

std::string theta_str(const DgModule& D, ThetaSet S);
std::string element_str(const DgModule& D, const ModuleElement& m);

/// d^2 of every generator theta_S, reduced; only nonzero entries are returned.
std::map<ThetaSet, ModuleElement> dg_square_residual(const DgModule& D);

struct PhiReport {
  int n = 0;
  /// Nonzero values of d phi - phi d on generators theta_S of M_{n-1}.
  std::map<ThetaSet, ModuleElement> residual;
  /// Images P * g of the relations of M_{n-1} that fail to vanish in M_n.
  std::vector<Poly> ill_defined;
  bool zero() const { return residual.empty() && ill_defined.empty(); }
};

/// phi: M_{n-1} -> M_n, 1 -> P * 1 with P = prod_{i<n} (y_i - x_n) (or `image` if given).
PhiReport phi_chain_map_residual(int n, const std::optional<Poly>& image = std::nullopt);

}  // namespace hhh
