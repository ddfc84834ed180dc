#pragma once

#include <cstdint>
#include <vector>

#include "tropj/rational.hpp"

namespace tropj::testutil {

// splitmix64: tiny deterministic generator, identical on every platform.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
  long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1))); }
  // Nonzero rational with small numerator and denominator.
  Rational nonzero_rational(long num_range = 20, long den_max = 6) {
    long n = 0;
    while (n == 0) n = int_in(-num_range, num_range);
    return Rational(n, int_in(1, den_max));
  }
  Rational rational(long num_range = 20, long den_max = 6) {
    return Rational(int_in(-num_range, num_range), int_in(1, den_max));
  }
};

}  // namespace tropj::testutil
