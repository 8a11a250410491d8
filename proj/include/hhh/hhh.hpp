#pragma once

// The stable homology pipeline: specialization, block simplification,
// quotient presentations, the flag ring E and Poincare series.

#include <memory>
#include <optional>
#include <vector>

#include "hhh/groebner.hpp"
#include "hhh/mf.hpp"
#include "hhh/permutation.hpp"
#include "hhh/series.hpp"

namespace hhh {

Permutation canonical_cycle_form(const Permutation& w);

/// Block ends m_1 < ... < m_r of a permutation in special form.
std::vector<int> block_ends(const Permutation& w);

/// y_i -> x_i on every entry; the result lives over the free ring Q[x,u]
/// and the q^{-n(n-1)} shift is cancelled.
KoszulFactorization hh0_specialize(const KoszulFactorization& K);

struct BlockSimplified {
  KoszulFactorization K;
  std::vector<MoveRecord> trace;
  std::vector<int> alpha_rows;  // rows (alpha_i | 0), 1-based
  std::vector<int> b_rows;      // rows (0 | b_{m_k}), 1-based
};

/// Per cycle block with end L: row_transform(k, L, -1), scale_row(k, -1) for k < L.
BlockSimplified block_simplify(const KoszulFactorization& K, const Permutation& w);

struct StableHomologyPresentation {
  int n = 0;
  Permutation w{1};
  std::vector<int> cycle_type;
  /// Q[x,u] modulo the defining sequence; its shift is the unit shift.
  QuotientPtr ring;
  std::vector<Poly> sequence;
  TriDegree unit_shift;
  std::vector<TriDegree> exterior;
};

StableHomologyPresentation stable_homology_presentation(int n, const Permutation& w, const GroebnerOptions& opts = {});

/// E/(x_i - x_{w(i)}) presented as Q[x,u]/(I'_w + J'') for an arbitrary w,
/// with unit shift (q^-2 t)^{n-r}.
StableHomologyPresentation twisted_flag_presentation(const Permutation& w, const GroebnerOptions& opts = {});

/// The five ideals describing the stable homology for w in special form, over Q[x,u].
struct StableIdeals {
  Ideal I, Ip, J, Jp, Jpp;
};
StableIdeals stable_ideals(const Permutation& w);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// J'' = (sum_{i<=j} u_i a_ij(x,x) : 1 <= j <= n) over `reg` (default Q[x,u]).
Ideal J2_ideal(int n, RegistryPtr reg = nullptr);

Window default_window(int n);

/// Tensors an a = 0 table with the exterior algebra on degrees q^{-2i} a.
DimTable with_exterior(const DimTable& even, int n, const Window& w);

/// Hilbert function of the ring, shifted, tensored with the exterior factor.
DimTable full_hhh(const StableHomologyPresentation& pres, const Window& w);

// ---------------------------------------------------------------- flag ring

RegistryPtr e_registry(int n);
/// Entries (i < j) of XV - VX.
std::vector<Poly> e_relations(int n);
Quotient e_ring(int n, const GroebnerOptions& opts = {});

struct EIsoReport {
  int n = 0;
  Window window;
  std::vector<Poly> forward_images;   // phi(g_j) over x,v
  std::vector<bool> forward_member;   // in the E ideal
  std::vector<Poly> backward_images;  // psi(r_ij) over x,u
  std::vector<bool> backward_member;  // in J''
  DimTable hilbert_E, hilbert_J;
  bool hilbert_agree = false;
  bool pass() const;
};

/// u_k -> (-1)^{k-1} v_1k and its inverse through the v_ij recursion.
EIsoReport verify_E_isomorphism(int n, const Window& w, const GroebnerOptions& opts = {});

}  // namespace hhh
