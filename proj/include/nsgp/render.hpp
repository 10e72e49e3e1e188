#pragma once

#include <string>
#include <vector>

#include "nsgp/core.hpp"

namespace nsgp {

// "<6,10,11,13>" from the minimal generators
std::string render_generators(const NumericalSemigroup& s);

// "[1,2,4,7]"
std::string render_int_list(const std::vector<int>& v);

// "{[],[2,4],[2,6]}"
std::string render_offset_family(const std::vector<std::vector<int>>& fam);

// "{2,9}" -- standard basis elements in increasing order
std::string render_basis(const StandardBasis& basis);

}  // namespace nsgp
