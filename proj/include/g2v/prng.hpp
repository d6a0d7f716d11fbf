#pragma once

#include "g2v/rational.hpp"

#include <cstdint>

namespace g2v {

// splitmix64: tiny, platform-independent, and good enough for sampling
// rational test points. All state is explicit so runs replay exactly.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  // Small rational with numerator in [-max_num, max_num] and denominator
  // in [1, max_den].
  Rat small_rational(long max_num = 4, long max_den = 4) {
    long n = static_cast<long>(below(static_cast<uint64_t>(2 * max_num + 1))) - max_num;
    long d = static_cast<long>(below(static_cast<uint64_t>(max_den))) + 1;
    return Rat(n, d);
  }
};

}  // namespace g2v
