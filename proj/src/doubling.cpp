#include "nsgp/doubling.hpp"

#include <algorithm>
#include <string>

namespace nsgp {

namespace {

std::string pair_msg(int a, int b, int half) {
  return "odd generators " + std::to_string(a) + " and " + std::to_string(b) +
         " sum to 2*" + std::to_string(half) +
         " but " + std::to_string(half) + " is outside the base";
}

// Odd part of a double is least_odd + 2A for a module A over the base
// generated by {0} and the halved offsets. These helpers work in that
// halved coordinate.

// gaps of the base left uncovered by the module generated by {0} | gens
int uncovered_gaps(const NumericalSemigroup& base, const std::vector<int>& gens,
                   const std::vector<int>& gap_list) {
  int uncovered = 0;
  for (int x : gap_list) {
    bool cov = false;
    for (int l : gens)
      if (x >= l && base.contains(x - l)) {
        cov = true;
        break;
      }
    if (!cov) ++uncovered;
  }
  return uncovered;
}

}  // namespace

DoubleSpec make_double_spec(NumericalSemigroup base, int least_odd,
                            std::vector<int> offsets) {
  if (least_odd <= 0 || least_odd % 2 == 0)
    throw Error("least odd element must be a positive odd number, got " +
                std::to_string(least_odd));
  std::sort(offsets.begin(), offsets.end());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (offsets[i] <= 0 || offsets[i] % 2 != 0)
      throw Error("offsets must be positive even numbers, got " +
                  std::to_string(offsets[i]));
    if (i > 0 && offsets[i] == offsets[i - 1])
      throw Error("duplicate offset " + std::to_string(offsets[i]));
  }

  const int n = least_odd;
  if (!base.contains(n))
    throw NotRealizable(pair_msg(n, n, n));
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const int li = offsets[i] / 2;
    if (!base.contains(n + li))
      throw NotRealizable(pair_msg(n, n + offsets[i], n + li));
    for (std::size_t j = i; j < offsets.size(); ++j) {
      const int lj = offsets[j] / 2;
      if (!base.contains(n + li + lj))
        throw NotRealizable(pair_msg(n + offsets[i], n + offsets[j],
                                     n + li + lj));
    }
  }
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const int li = offsets[i] / 2;
    if (base.contains(li))
      throw NotMinimal("generator " + std::to_string(n + offsets[i]) +
                       " is " + std::to_string(n) + " plus the doubled base element " +
                       std::to_string(li));
    for (std::size_t j = 0; j < i; ++j) {
      const int lj = offsets[j] / 2;
      if (base.contains(li - lj))
        throw NotMinimal("generator " + std::to_string(n + offsets[i]) +
                         " is " + std::to_string(n + offsets[j]) +
                         " plus the doubled base element " +
                         std::to_string(li - lj));
    }
  }
  return DoubleSpec{std::move(base), least_odd, std::move(offsets)};
}

NumericalSemigroup double_of(const DoubleSpec& spec) {
  const NumericalSemigroup& H = spec.base;
  const int n = spec.least_odd;
  int max_off = spec.offsets.empty() ? 0 : spec.offsets.back();
  const int limit =
      std::max({2 * H.bound() + 2, n + 2 * H.conductor() + 2 * H.multiplicity(),
                n + max_off}) + 2;
  std::vector<std::uint64_t> w(bits::words_for(limit), 0);
  for (int h = 0; 2 * h <= limit; ++h)
    if (H.contains(h)) bits::set(w, 2 * h);
  std::vector<int> halves{0};
  for (int o : spec.offsets) halves.push_back(o / 2);
  for (int a : halves)
    for (int h = 0; n + 2 * (a + h) <= limit; ++h)
      if (H.contains(h)) bits::set(w, n + 2 * (a + h));
  return NumericalSemigroup::from_membership(std::move(w), limit);
}

NumericalSemigroup d2(const NumericalSemigroup& s) {
  const int limit = s.bound() / 2;
  std::vector<std::uint64_t> w(bits::words_for(limit), 0);
  for (int x = 0; x <= limit; ++x)
    if (s.contains(2 * x)) bits::set(w, x);
  return NumericalSemigroup::from_membership(std::move(w), limit);
}

StandardBasis standard_basis_of_double(const NumericalSemigroup& base,
                                       int least_odd) {
  const int n = least_odd;
  const int m = base.multiplicity();
  if (n <= 0 || n % 2 == 0)
    throw Error("least odd element must be a positive odd number, got " +
                std::to_string(n));
  if (n <= base.conductor() + m - 2)
    throw HypothesisViolated("need n > conductor + multiplicity - 2 = " +
                             std::to_string(base.conductor() + m - 2) +
                             ", got n = " + std::to_string(n));
  if (n <= 2 * m)
    throw HypothesisViolated("need n > twice the multiplicity = " +
                             std::to_string(2 * m) + ", got n = " +
                             std::to_string(n));

  StandardBasis b;
  b.multiplicity = 2 * m;
  b.minima.assign(static_cast<std::size_t>(2 * m) - 1, 0);
  auto place = [&](int v) { b.minima[static_cast<std::size_t>(v % (2 * m)) - 1] = v; };
  place(n);
  if (m >= 2) {
    for (int s : base.standard_basis().minima) {
      place(2 * s);
      place(n + 2 * s);
    }
  }
  b.largest = *std::max_element(b.minima.begin(), b.minima.end());
  return b;
}

std::pair<int, int> genus_bounds(const NumericalSemigroup& base,
                                 int least_odd) {
  const int n = least_odd;
  const int m = base.multiplicity();
  if (n <= 0 || n % 2 == 0)
    throw Error("least odd element must be a positive odd number, got " +
                std::to_string(n));
  if (n < base.conductor() + m - 1)
    throw HypothesisViolated("need n >= conductor + multiplicity - 1 = " +
                             std::to_string(base.conductor() + m - 1) +
                             ", got n = " + std::to_string(n));
  if (n == 2 * m - 1)
    throw HypothesisViolated("n = " + std::to_string(n) +
                             " equals twice the multiplicity minus 1");
  const int half = (n - 1) / 2;
  return {base.genus() + half, 2 * base.genus() + half};
}

std::vector<DoubleSpec> enumerate_doubles(const NumericalSemigroup& base,
                                          int least_odd, int target_genus) {
  const int n = least_odd;
  if (n <= 0 || n % 2 == 0)
    throw Error("least odd element must be a positive odd number, got " +
                std::to_string(n));
  const int g = base.genus();
  if (g > 25)
    throw GenusTooLarge("base genus " + std::to_string(g) +
                        " too large for offset enumeration");
  std::vector<DoubleSpec> out;
  const int k = target_genus - g - (n - 1) / 2;
  if (k < 0 || k > g || !base.contains(n)) return out;

  const std::vector<int> gap_list = base.gaps();
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < g; ++i)
      if (mask >> i & 1) sel.push_back(gap_list[static_cast<std::size_t>(i)]);
    bool ok = true;
    for (std::size_t i = 0; i < sel.size() && ok; ++i)
      for (std::size_t j = 0; j < i && ok; ++j)
        if (base.contains(sel[i] - sel[j])) ok = false;  // redundant generator
    for (std::size_t i = 0; i < sel.size() && ok; ++i) {
      if (!base.contains(n + sel[i]) || !base.contains(n + 2 * sel[i]))
        ok = false;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (!base.contains(n + sel[i] + sel[j])) ok = false;
    }
    if (!ok || uncovered_gaps(base, sel, gap_list) != k) continue;
    std::vector<int> offsets;
    offsets.reserve(sel.size());
    for (int l : sel) offsets.push_back(2 * l);
    out.push_back(DoubleSpec{base, n, std::move(offsets)});
  }
  std::sort(out.begin(), out.end(), [](const DoubleSpec& a, const DoubleSpec& b) {
    return a.offsets < b.offsets;
  });
  return out;
}

DoubleSpec special_double_spec(const NumericalSemigroup& base, int least_odd,
                               SpecialForm form) {
  const int n = least_odd;
  const int m = base.multiplicity();
  const int g = base.genus();
  const int c = base.conductor();
  if (n <= 0 || n % 2 == 0)
    throw Error("least odd element must be a positive odd number, got " +
                std::to_string(n));
  switch (form) {
    case SpecialForm::MinusOne: {
      if (m < 2)
        throw HypothesisViolated("the full monoid has no residue minima");
      if (n < std::max(c + m - 1, 2 * g + 3))
        throw HypothesisViolated(
            "need n >= max(conductor + multiplicity - 1, 2*genus + 3) = " +
            std::to_string(std::max(c + m - 1, 2 * g + 3)));
      const int smax = base.standard_basis().largest;
      return make_double_spec(base, n, {2 * (smax - m)});
    }
    case SpecialForm::MinusTwo: {
      if (!base.is_symmetric())
        throw HypothesisViolated("base is not symmetric");
      if (m < 3)
        throw HypothesisViolated("need multiplicity >= 3, got " +
                                 std::to_string(m));
      if (n < 2 * g + m - 1)
        throw HypothesisViolated("need n >= 2*genus + multiplicity - 1 = " +
                                 std::to_string(2 * g + m - 1));
      const int smax = base.standard_basis().largest;
      if (smax <= 2 * m)
        throw HypothesisViolated("largest residue minimum does not exceed "
                                 "twice the multiplicity");
      return make_double_spec(base, n, {2 * (smax - 2 * m)});
    }
    case SpecialForm::Lowest: {
      if (n < c + m - 1)
        throw HypothesisViolated("need n >= conductor + multiplicity - 1 = " +
                                 std::to_string(c + m - 1));
      if (n == 2 * m - 1)
        throw HypothesisViolated("n = " + std::to_string(n) +
                                 " equals twice the multiplicity minus 1");
      // minimal module generators of the saturated odd part: gaps with no
      // smaller gap at semigroup distance
      std::vector<int> offs;
      const std::vector<int> gap_list = base.gaps();
      for (std::size_t i = 0; i < gap_list.size(); ++i) {
        bool needed = true;
        for (std::size_t j = 0; j < i && needed; ++j)
          if (base.contains(gap_list[i] - gap_list[j])) needed = false;
        if (needed) offs.push_back(2 * gap_list[i]);
      }
      return make_double_spec(base, n, std::move(offs));
    }
  }
  throw Error("unknown special form");
}

NumericalSemigroup special_double(const NumericalSemigroup& base, int least_odd,
                                  SpecialForm form) {
  return double_of(special_double_spec(base, least_odd, form));
}

int genus_of_special_double(const NumericalSemigroup& base, int least_odd,
                            SpecialForm form) {
  return special_double(base, least_odd, form).genus();
}

}  // namespace nsgp
