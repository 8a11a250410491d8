#pragma once

// Sparse multivariate polynomials over Q with a graded variable registry.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hhh {

using Rational = mpq_class;

enum class Errc {
  registry_mismatch,
  inhomogeneous,
  zero_polynomial,
  index_out_of_range,
  invalid_permutation,
  not_partially_symmetric,
  degree_mismatch,
  exclusion_precondition,
  infinite_slice,
  resource_limit,
  parse_error,
  internal,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Exponent triple q^q t^t a^a. `t` is homological degree, `a` Hochschild degree.
struct TriDegree {
  int q = 0;
  int t = 0;
  int a = 0;

  constexpr TriDegree operator+(const TriDegree& o) const { return {q + o.q, t + o.t, a + o.a}; }
  constexpr TriDegree operator-(const TriDegree& o) const { return {q - o.q, t - o.t, a - o.a}; }
  constexpr TriDegree operator-() const { return {-q, -t, -a}; }
  constexpr TriDegree operator*(int k) const { return {q * k, t * k, a * k}; }
  constexpr TriDegree& operator+=(const TriDegree& o) {
    q += o.q;
    t += o.t;
    a += o.a;
    return *this;
  }
  constexpr auto operator<=>(const TriDegree&) const = default;
};

std::ostream& operator<<(std::ostream& os, const TriDegree& d);

enum class VarKind { x, y, u, v, alpha, aux };

struct Variable {
  std::string name;
  VarKind kind = VarKind::aux;
  int i = 0;  // index (x_i, y_i, u_i, alpha_i, first index of v_ij)
  int j = 0;  // second index of v_ij
  TriDegree degree;
};

inline constexpr std::size_t kMaxVars = 48;

/// Ordered list of graded variables. Position in the list is the variable's
/// rank in the monomial order: index 0 is the smallest variable.
class Registry {
 public:
  Registry(int n, std::vector<Variable> vars);

  int n() const { return n_; }
  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t k) const { return vars_[k]; }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws on unknown name
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const Registry& o) const;

 private:
  int n_;
  std::vector<Variable> vars_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

/// Builds registries in the canonical order x < y < u < v < alpha < aux.
class RegistryBuilder {
 public:
  explicit RegistryBuilder(int n) : n_(n) {}

  RegistryBuilder& x();
  RegistryBuilder& y();
  RegistryBuilder& u(int from = 1);
  /// v_ij for i < j; with `diagonal` also the extraneous v_ii.
  RegistryBuilder& v(bool diagonal = false);
  RegistryBuilder& alpha();
  RegistryBuilder& aux(std::string name, TriDegree degree);
  RegistryBuilder& add(Variable var);

  RegistryPtr build() const;

 private:
  int n_;
  std::vector<Variable> vars_;
};

std::string x_name(int i);
std::string y_name(int i);
std::string u_name(int k);
std::string v_name(int i, int j);
std::string alpha_name(int i);

TriDegree u_degree(int k);
TriDegree v_degree(int i, int j);

/// Dense exponent vector over a registry.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint16_t total = 0;

  std::uint8_t operator[](std::size_t k) const { return e[k]; }
  void set(std::size_t k, int value);

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / o, assuming o divides this.
  Monomial quotient(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  bool is_one() const { return total == 0; }

  bool operator==(const Monomial& o) const { return total == o.total && e == o.e; }
};

/// Graded reverse lexicographic comparison: true iff a > b.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

TriDegree degree_of(const Registry& reg, const Monomial& m);

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(RegistryPtr reg) : reg_(std::move(reg)) {}
  /// Terms need not be sorted or combined.
  Poly(RegistryPtr reg, std::vector<Term> terms);

  static Poly constant(RegistryPtr reg, const Rational& c);
  static Poly var(RegistryPtr reg, std::string_view name);
  static Poly monomial(RegistryPtr reg, const Monomial& m, const Rational& c = 1);

  const RegistryPtr& registry() const { return reg_; }
  /// Terms sorted in decreasing grevlex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const Monomial& lead_monomial() const { return terms_.front().first; }
  const Rational& lead_coeff() const { return terms_.front().second; }

  /// Exponent of the named variable is positive in some term.
  bool involves(std::string_view name) const;
  bool involves(std::size_t var) const;
  int degree_in(std::size_t var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly mul_term(const Monomial& m, const Rational& c) const;
  Poly pow(int k) const;

  /// Equality of polynomials. Registries must agree.
  bool operator==(const Poly& o) const;

  /// Rewrites this polynomial over another registry, matching variables by name.
  Poly rebase(const RegistryPtr& target) const;

  /// Makes the leading coefficient 1 (no-op on zero).
  Poly monic() const;

  std::string str() const;

 private:
  void normalize();

  RegistryPtr reg_;
  std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

enum class Op { add, mul, neg, scale };

/// Exact arithmetic entry point; `rhs` is ignored for `neg`.
Poly arith(Op op, const Poly& lhs, const Poly& rhs);
Poly arith(Op op, const Poly& lhs, const Rational& rhs);

using Assignment = std::map<std::string, Poly, std::less<>>;

/// Simultaneous substitution of named variables. The result lives in `target`
/// (default: the registry of the assigned values, or of `p` when empty).
/// Unassigned variables map to the same-named variable of the target.
Poly substitute(const Poly& p, const Assignment& assignment, RegistryPtr target = nullptr);

/// Common tridegree of all terms.
TriDegree tridegree_of(const Poly& p);
bool is_homogeneous(const Poly& p);

/// Parses expressions such as "y1*x2 - 3/2*x1^2 + 1" over `reg`.
Poly parse_poly(const RegistryPtr& reg, std::string_view text);

}  // namespace hhh
