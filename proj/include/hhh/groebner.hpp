#pragma once

// Groebner bases, normal forms and Hilbert functions of graded quotients.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hhh/poly.hpp"
#include "hhh/series.hpp"

namespace hhh {

struct Ideal {
  RegistryPtr reg;
  std::vector<Poly> generators;
};

struct GroebnerOptions {
  std::size_t spair_budget = 500000;
};

/// Reduced Groebner basis (monic, sorted by increasing lead monomial).
/// Generators must be homogeneous; zero generators are ignored.
std::vector<Poly> groebner_basis(const Ideal& ideal, const GroebnerOptions& opts = {});

/// Remainder of p on division by `basis` (fully reduced when `basis` is a Groebner basis).
Poly reduce(const Poly& p, const std::vector<Poly>& basis);

class Quotient {
 public:
  explicit Quotient(Ideal ideal, TriDegree shift = {}, const GroebnerOptions& opts = {});

  const RegistryPtr& registry() const { return ideal_.reg; }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Poly>& basis() const { return basis_; }
  const TriDegree& shift() const { return shift_; }

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

 private:
  Ideal ideal_;
  std::vector<Poly> basis_;
  TriDegree shift_;
};

Poly normal_form(const Poly& p, const Quotient& q);

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opts = {});

/// Generators of `of` not contained in `in` (empty iff of is contained in in).
std::vector<Poly> non_members(const Ideal& of, const Quotient& in);

/// Standard-monomial counts of the quotient per tridegree, shifted by the
/// quotient's shift, restricted to `w`. Computed from the Hilbert numerator
/// of the lead-term ideal.
DimTable hilbert_function(const Quotient& q, const Window& w);

/// The same by enumerating standard monomials one by one.
DimTable hilbert_function_enumerate(const Quotient& q, const Window& w);

/// Numerator N with Hilbert series N / prod(1 - T^deg v) of reg / (monomials).
DimTable hilbert_numerator(const Registry& reg, std::vector<Monomial> monomials);

/// Graded dimensions of the free ring on the registry, as a series.
PoincareSeries free_ring_series(const Registry& reg);

struct RegularityVerdict {
  bool accept = false;
  Window window;
  std::optional<TriDegree> first_failure;
  long long expected = 0;
  long long actual = 0;
};

/// Compares the Hilbert function of reg/(seq) with prod(1 - T^deg f) / prod(1 - T^deg z).
RegularityVerdict certify_regular_sequence(const std::vector<Poly>& seq, const RegistryPtr& reg, const Window& w,
                                           const GroebnerOptions& opts = {});

}  // namespace hhh
