#pragma once

#include <cstdint>

namespace minorlab {

// splitmix64: tiny, stable across platforms, good enough for test-case
// generation.  Not for cryptography.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).  n must be positive.
  uint64_t next_below(uint64_t n) { return next() % n; }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  double next_double() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Derive an independent stream, e.g. one per test case.
  SplitMix64 split() { return SplitMix64(next()); }
};

}  // namespace minorlab
