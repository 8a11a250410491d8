#pragma once

// Symmetric functions, divided differences and the Frobenius trace.

#include <string>
#include <vector>

#include "hhh/poly.hpp"

namespace hhh {

enum class SymFamily { elementary, complete };

struct SymFunSpec {
  SymFamily family = SymFamily::elementary;
  int k = 0;
  std::vector<std::string> vars;
};

Poly sym_poly(const RegistryPtr& reg, const SymFunSpec& spec);
Poly elementary(const RegistryPtr& reg, int k, const std::vector<std::string>& vars);
Poly complete(const RegistryPtr& reg, int k, const std::vector<std::string>& vars);

/// Names x_from..x_to (empty when from > to).
std::vector<std::string> x_vars(int from, int to);
std::vector<std::string> y_vars(int from, int to);

/// Exchanges two variables of the registry.
Poly swap_vars(const Poly& p, std::size_t a, std::size_t b);

bool is_symmetric_in(const Poly& p, const std::vector<std::string>& vars);

/// (p - s_i p) / (x_i - x_{i+1}).
Poly divided_difference(int i, const Poly& p);

/// d_1 d_2 ... d_{n-1} p for p symmetric in x_1..x_{n-1}.
Poly demazure_trace(const Poly& p, int n);

Poly frobenius_pairing(const Poly& f, const Poly& g, int n);

}  // namespace hhh
