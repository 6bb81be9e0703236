#pragma once

#include <cstdint>

#include "fairfan/measures.hpp"

namespace fairfan {

// Deterministic 64-bit generator; identical seeds give identical streams on
// every platform (distributions are hand-rolled).
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  long below(long n);  // uniform in [0, n)
  long range(long lo, long hi);
};

// Random family of m measures in R^d: small integer atom clouds with the
// default quarter-gap bump radius. Deterministic in the seed.
MeasureFamily gen_random_family(int d, int m, uint64_t seed, int atoms_per_measure = 4);

// Random interval partition of R into n pieces; cut points fall between or
// exactly on the given 1D family's atoms so boundary sharing is exercised.
ConvexPartition random_interval_partition(const MeasureFamily& family, int n, Rng& rng);

// Random planar partition equiparting family.measures[0], built by cutting
// it against a random auxiliary cloud; n must be a power of two.
ConvexPartition random_equiparting_partition(const MeasureFamily& family, int n, Rng& rng);

}  // namespace fairfan
