#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ordkit {

// Element subsets are 64-bit masks over the canonical element indexing.
// Every structure in the library is capped at kMaxElements elements, which
// keeps exhaustive enumeration kernels affordable and subsets O(1).
using Subset = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Subset bit(int i) { return Subset{1} << i; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1; }
constexpr Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}
constexpr bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int popcount(Subset s) { return std::popcount(s); }

// Lowest set bit index; undefined for 0.
constexpr int first_bit(Subset s) { return std::countr_zero(s); }

inline std::vector<int> to_indices(Subset s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

template <typename F>
void for_each_bit(Subset s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace ordkit
