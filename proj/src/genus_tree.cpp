#include "nsgp/genus_tree.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace nsgp {

namespace {

using std::uint64_t;

// One word of membership for 0..63 with everything >= conductor set.  At
// genus <= 21 no minimal generator exceeds 3*21 = 63, so this never clips.
struct Node {
  uint64_t mask;
  int conductor;
  int multiplicity;
};

bool is_min_generator(uint64_t mask, int x, int m) {
  for (int a = m; a + a <= x; ++a) {
    if ((mask >> a & 1) != 0 && (mask >> (x - a) & 1) != 0) return false;
  }
  return true;
}

void walk(const Node& node, int depth, int target,
          std::vector<NumericalSemigroup>& out) {
  if (depth == target) {
    out.push_back(NumericalSemigroup::from_membership({node.mask}, 63));
    return;
  }
  // children remove one minimal generator past the Frobenius number; those
  // all live in [conductor, conductor + multiplicity - 1]
  const int lo = node.conductor;
  const int hi = node.conductor + node.multiplicity - 1;
  for (int x = lo; x <= hi; ++x) {
    if (!is_min_generator(node.mask, x, node.multiplicity)) continue;
    Node child;
    child.mask = node.mask & ~(uint64_t{1} << x);
    child.conductor = x + 1;
    child.multiplicity =
        x == node.multiplicity
            ? std::countr_zero(child.mask & ~uint64_t{1})
            : node.multiplicity;
    walk(child, depth + 1, target, out);
  }
}

void sort_by_generators(std::vector<NumericalSemigroup>& v) {
  std::sort(v.begin(), v.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
              return a.min_generators() < b.min_generators();
            });
}

}  // namespace

GenusCensus enumerate_by_genus(int genus, int max_genus) {
  if (genus < 0) throw Error("genus must be nonnegative");
  const int cap = std::min(max_genus, kHardMaxGenus);
  if (genus > cap) {
    throw GenusTooLarge("genus " + std::to_string(genus) + " exceeds cap " +
                        std::to_string(cap));
  }
  GenusCensus census;
  census.genus = genus;
  if (genus == 0) {
    census.semigroups.push_back(NumericalSemigroup::from_generators({1}));
    return census;
  }
  Node start;  // genus 1: remove 1 from the full semigroup
  start.mask = ~uint64_t{0} & ~uint64_t{2};
  start.conductor = 2;
  start.multiplicity = 2;
  walk(start, 1, genus, census.semigroups);
  sort_by_generators(census.semigroups);
  return census;
}

GenusCensus oracle_enumerate_by_genus(int genus) {
  if (genus < 0) throw Error("genus must be nonnegative");
  if (genus > kOracleMaxGenus) {
    throw GenusTooLarge("genus " + std::to_string(genus) +
                        " exceeds oracle cap " +
                        std::to_string(kOracleMaxGenus));
  }
  GenusCensus census;
  census.genus = genus;
  if (genus == 0) {
    census.semigroups.push_back(NumericalSemigroup::from_generators({1}));
    return census;
  }
  const int width = 2 * genus - 1;  // every gap is below twice the genus
  const uint64_t end = uint64_t{1} << width;
  uint64_t v = (uint64_t{1} << genus) - 1;
  while (v < end) {
    const uint64_t gaps = v << 1;  // bit i of `gaps` <-> integer i
    const uint64_t mask = ~gaps;
    bool closed = true;
    for (int x = 2; x <= width && closed; ++x) {
      if ((gaps >> x & 1) == 0) continue;
      for (int a = 1; a + a <= x; ++a) {
        if ((mask >> a & 1) != 0 && (mask >> (x - a) & 1) != 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) {
      census.semigroups.push_back(
          NumericalSemigroup::from_membership({mask}, 3 * genus + 1));
    }
    const uint64_t low = v & (~v + 1);  // Gosper's hack: next g-subset
    const uint64_t ripple = v + low;
    v = (((ripple ^ v) >> 2) / low) | ripple;
  }
  sort_by_generators(census.semigroups);
  return census;
}

}  // namespace nsgp
