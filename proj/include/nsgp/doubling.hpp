#pragma once

#include <utility>
#include <vector>

#include "nsgp/core.hpp"

namespace nsgp {

// A double of `base`: even part is exactly 2*base, odd part is generated by
// least_odd and least_odd + offsets over 2*base. Construct via
// make_double_spec, which enforces realizability and minimality.
struct DoubleSpec {
  NumericalSemigroup base;
  int least_odd = 1;
  std::vector<int> offsets;  // strictly increasing positive even numbers
};

DoubleSpec make_double_spec(NumericalSemigroup base, int least_odd,
                            std::vector<int> offsets);

NumericalSemigroup double_of(const DoubleSpec& spec);

// the semigroup of halved even elements
NumericalSemigroup d2(const NumericalSemigroup& s);

// closed form for the standard basis of 2*base + least_odd*N0;
// requires least_odd > conductor + multiplicity - 2 and > 2*multiplicity
StandardBasis standard_basis_of_double(const NumericalSemigroup& base,
                                       int least_odd);

// {genus + (n-1)/2, 2*genus + (n-1)/2}; requires n >= conductor +
// multiplicity - 1 and n != 2*multiplicity - 1
std::pair<int, int> genus_bounds(const NumericalSemigroup& base,
                                 int least_odd);

// every double of `base` with the given least odd element and genus,
// ordered lexicographically by offsets; empty when none exist
std::vector<DoubleSpec> enumerate_doubles(const NumericalSemigroup& base,
                                          int least_odd, int target_genus);

enum class SpecialForm {
  MinusOne,  // one odd generator at 2*(s_max - m); genus drops by 1 from max
  MinusTwo,  // symmetric base, generator at 2*(s_max - 2m); drops by 2
  Lowest,    // odd part is every odd >= least_odd; genus hits the lower bound
};

DoubleSpec special_double_spec(const NumericalSemigroup& base, int least_odd,
                               SpecialForm form);
NumericalSemigroup special_double(const NumericalSemigroup& base,
                                  int least_odd, SpecialForm form);
int genus_of_special_double(const NumericalSemigroup& base, int least_odd,
                            SpecialForm form);

}  // namespace nsgp
