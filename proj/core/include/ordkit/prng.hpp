#pragma once

#include <cstdint>

namespace ordkit {

// SplitMix64.  Standard-library distributions are implementation-defined,
// and the determinism contract ("same seed, identical structure") has to
// hold across compilers, so bounded draws are done by hand.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n) via 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  bool chance(std::uint64_t numer, std::uint64_t denom) {
    return below(denom) < numer;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ordkit
