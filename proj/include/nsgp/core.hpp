#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsgp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGenerators final : Error {
  EmptyGenerators() : Error("generator list is empty") {}
};

struct NonCofinite final : Error {
  explicit NonCofinite(int d)
      : Error("generators have gcd " + std::to_string(d) +
              "; the complement is infinite") {}
};

struct InvalidGenerator final : Error {
  explicit InvalidGenerator(int g)
      : Error("generators must be positive, got " + std::to_string(g)) {}
};

struct TrivialSemigroup final : Error {
  TrivialSemigroup()
      : Error("multiplicity 1 has no nonzero residue classes") {}
};

struct NotRealizable final : Error {
  using Error::Error;
};

struct NotMinimal final : Error {
  using Error::Error;
};

struct HypothesisViolated final : Error {
  using Error::Error;
};

struct GenusTooLarge final : Error {
  using Error::Error;
};

// Multiplicity m plus, for each nonzero residue class mod m, the least
// semigroup element in that class. minima[i] is the minimum for class i+1.
struct StandardBasis {
  int multiplicity = 0;
  std::vector<int> minima;
  int largest = 0;

  // all basis elements (multiplicity and minima) in ascending order
  std::vector<int> sorted_elements() const;
  bool operator==(const StandardBasis&) const = default;
};

// A cofinite submonoid of the naturals. Immutable once built; membership is
// a bitmap covering [0, bound()], everything above is implied present.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::span<const int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<int> gens);
  // for callers that already hold a closed cofinite membership set;
  // `limit` must reach at least conductor + multiplicity
  static NumericalSemigroup from_membership(std::vector<std::uint64_t> bits,
                                            int limit);

  bool contains(int x) const;
  int bound() const { return bound_; }
  int conductor() const { return conductor_; }
  int frobenius() const { return conductor_ - 1; }  // -1 for the full monoid
  int genus() const { return genus_; }
  int multiplicity() const { return multiplicity_; }
  bool is_full() const { return conductor_ == 0; }
  int least_odd() const;
  std::vector<int> gaps() const;
  bool is_symmetric() const;
  StandardBasis standard_basis() const;
  const std::vector<int>& min_generators() const { return min_generators_; }

  bool operator==(const NumericalSemigroup& o) const;

 private:
  NumericalSemigroup() = default;
  void derive(int limit);

  std::vector<std::uint64_t> bits_;
  int bound_ = 0;
  int conductor_ = 0;
  int genus_ = 0;
  int multiplicity_ = 1;
  std::vector<int> min_generators_;
};

namespace bits {
inline std::size_t words_for(int limit) {
  return static_cast<std::size_t>(limit / 64 + 1);
}
inline void set(std::vector<std::uint64_t>& w, int x) {
  w[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
}
inline bool test(const std::vector<std::uint64_t>& w, int x) {
  return (w[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1;
}
}  // namespace bits

}  // namespace nsgp
