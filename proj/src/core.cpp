#include "nsgp/core.hpp"

#include <algorithm>
#include <numeric>

namespace nsgp {

namespace {

// hard ceiling on the working bitmap so absurd generator pairs fail loudly
// instead of allocating gigabytes
constexpr int kMaxLimit = 1 << 26;

}  // namespace

std::vector<int> StandardBasis::sorted_elements() const {
  std::vector<int> out;
  out.reserve(minima.size() + 1);
  out.push_back(multiplicity);
  out.insert(out.end(), minima.begin(), minima.end());
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::initializer_list<int> gens) {
  return from_generators(std::span<const int>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::span<const int> gens) {
  if (gens.empty()) throw EmptyGenerators();
  std::vector<int> gs(gens.begin(), gens.end());
  for (int g : gs)
    if (g <= 0) throw InvalidGenerator(g);
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  int d = 0;
  for (int g : gs) d = std::gcd(d, g);
  if (d != 1) throw NonCofinite(d);

  const int m = gs.front();
  int limit = std::max(64, 2 * gs.back());
  for (;;) {
    std::vector<std::uint64_t> w(bits::words_for(limit), 0);
    bits::set(w, 0);
    for (int x = 1; x <= limit; ++x)
      for (int g : gs)
        if (x >= g && bits::test(w, x - g)) {
          bits::set(w, x);
          break;
        }
    // a run of m consecutive members certifies the cofinite tail
    int run = 0;
    bool certified = false;
    for (int x = 0; x <= limit && !certified; ++x) {
      run = bits::test(w, x) ? run + 1 : 0;
      if (run >= m) certified = true;
    }
    if (certified) {
      NumericalSemigroup H;
      H.bits_ = std::move(w);
      H.derive(limit);
      return H;
    }
    if (limit > kMaxLimit) throw Error("generators too large to close over");
    limit *= 2;
  }
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::vector<std::uint64_t> w, int limit) {
  if (limit < 0 || bits::words_for(limit) > w.size())
    throw Error("membership window does not cover the stated limit");
  if (!bits::test(w, 0)) throw Error("membership set must contain 0");
  // Every gap of the stated set lies below its last in-window gap, so
  // checking sums below that point validates the whole input.
  int last_gap = 0;
  for (int x = limit; x >= 1; --x)
    if (!bits::test(w, x)) {
      last_gap = x;
      break;
    }
  for (int x = 2; x <= last_gap; ++x) {
    if (bits::test(w, x)) continue;
    for (int a = 1; a <= x / 2; ++a)
      if (bits::test(w, a) && bits::test(w, x - a))
        throw Error("membership set is not additively closed: " +
                    std::to_string(a) + " + " + std::to_string(x - a) +
                    " = " + std::to_string(x) + " is missing");
  }
  NumericalSemigroup H;
  H.bits_ = std::move(w);
  H.derive(limit);
  return H;
}

void NumericalSemigroup::derive(int limit) {
  if (!bits::test(bits_, 0)) throw Error("membership set must contain 0");
  int last_gap = -1;
  for (int x = limit; x >= 1; --x)
    if (!bits::test(bits_, x)) {
      last_gap = x;
      break;
    }
  conductor_ = last_gap + 1;
  genus_ = 0;
  for (int x = 1; x < conductor_; ++x)
    if (!bits::test(bits_, x)) ++genus_;
  multiplicity_ = conductor_ == 0 ? 1 : 0;
  for (int x = 1; x <= limit && multiplicity_ == 0; ++x)
    if (bits::test(bits_, x)) multiplicity_ = x;
  if (conductor_ + multiplicity_ > limit + 1)
    throw Error("membership window too small to certify the tail");

  min_generators_.clear();
  const int top = std::max(conductor_ + multiplicity_ - 1, 1);
  for (int x = 1; x <= top; ++x) {
    if (!bits::test(bits_, x)) continue;
    bool sum = false;
    for (int a = multiplicity_; a + multiplicity_ <= x && !sum; ++a)
      if (bits::test(bits_, a) && bits::test(bits_, x - a)) sum = true;
    if (!sum) min_generators_.push_back(x);
  }

  // normalize the stored window: conductor + multiplicity + largest generator
  const int target = conductor_ + multiplicity_ + min_generators_.back();
  std::vector<std::uint64_t> nw(bits::words_for(target), 0);
  for (int x = 0; x <= target; ++x)
    if (x >= conductor_ || (x <= limit && bits::test(bits_, x)))
      bits::set(nw, x);
  bits_ = std::move(nw);
  bound_ = target;
}

bool NumericalSemigroup::contains(int x) const {
  if (x < 0) return false;
  if (x > bound_) return true;  // bound_ >= conductor_
  return bits::test(bits_, x);
}

int NumericalSemigroup::least_odd() const {
  for (int x = 1; x <= bound_; x += 2)
    if (bits::test(bits_, x)) return x;
  throw Error("no odd element below the stored bound");  // unreachable: gcd 1
}

std::vector<int> NumericalSemigroup::gaps() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (int x = 1; x < conductor_; ++x)
    if (!bits::test(bits_, x)) out.push_back(x);
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  const int f = frobenius();
  for (int x = 0; x <= f; ++x)
    if (contains(x) == contains(f - x)) return false;
  return true;
}

StandardBasis NumericalSemigroup::standard_basis() const {
  if (multiplicity_ < 2) throw TrivialSemigroup();
  StandardBasis b;
  b.multiplicity = multiplicity_;
  b.minima.reserve(static_cast<std::size_t>(multiplicity_) - 1);
  for (int r = 1; r < multiplicity_; ++r) {
    int x = r;
    while (!contains(x)) x += multiplicity_;
    b.minima.push_back(x);
  }
  b.largest = *std::max_element(b.minima.begin(), b.minima.end());
  return b;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& o) const {
  if (conductor_ != o.conductor_ || genus_ != o.genus_) return false;
  for (int x = 1; x < conductor_; ++x)
    if (bits::test(bits_, x) != bits::test(o.bits_, x)) return false;
  return true;
}

}  // namespace nsgp
