#pragma once

#include <vector>

#include "nsgp/core.hpp"

namespace nsgp {

inline constexpr int kDefaultMaxGenus = 20;
// membership masks are one 64-bit word; every element that can matter at
// genus g is at most 3g, so 21 is the structural ceiling
inline constexpr int kHardMaxGenus = 21;

struct GenusCensus {
  int genus = 0;
  std::vector<NumericalSemigroup> semigroups;  // sorted by generator list
};

// walk the removal tree: children drop one minimal generator beyond the
// Frobenius number
GenusCensus enumerate_by_genus(int genus, int max_genus = kDefaultMaxGenus);

// independent route: g-subsets of [1, 2g-1] whose complement is closed
GenusCensus oracle_enumerate_by_genus(int genus);

inline constexpr int kOracleMaxGenus = 12;

}  // namespace nsgp
