#pragma once

// Aggregated exact checks of the polynomial identities and the dg structure.

#include <string>
#include <vector>

namespace hhh {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// a_ij relations, the two z_{m,n} constructions and the trace pairing at size n.
std::vector<Check> identity_suite(int n);

/// d^2 on M_n for the identity and each cycle type, and the map M_{n-1} -> M_n.
std::vector<Check> dg_suite(int n);

bool all_pass(const std::vector<Check>& checks);

}  // namespace hhh
