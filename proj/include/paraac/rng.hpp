#pragma once

#include <cstdint>
#include <vector>

namespace paraac {

// Deterministic, cross-platform random stream: xoshiro256** seeded through
// SplitMix64. Streams are addressed by (master_seed, stream_index); equal
// addresses replay the same sequence bit for bit, distinct indices give
// statistically independent streams. The exact derivation is part of the
// external reproducibility contract and is documented in the README:
//
//   h  = splitmix_mix(stream_index + 0x9E3779B97F4A7C15)
//   x0 = master_seed XOR h
//   state[0..3] = four successive SplitMix64 outputs starting from x0
//
// where splitmix_mix is the SplitMix64 output scrambler.
class RngStream {
 public:
  explicit RngStream(uint64_t master_seed, uint64_t stream_index = 0);

  uint64_t next_u64();

  // uniform in [0,1) with 53 random mantissa bits: (next_u64() >> 11) * 2^-53
  double next_unit();

  // Bernoulli(p) decided as next_unit() < p, so a trial consumes exactly one
  // 64-bit draw and p = 0 / p = 1 are exact.
  bool bernoulli(double p);

  // uniform in [0, bound), unbiased via rejection
  uint64_t next_below(uint64_t bound);

  uint64_t master_seed() const { return master_seed_; }
  uint64_t stream_index() const { return stream_index_; }

 private:
  uint64_t state_[4];
  uint64_t master_seed_;
  uint64_t stream_index_;
};

// Uniform c-element subset of [1..n], ascending. Consumes c draws via a
// partial Fisher-Yates shuffle.
std::vector<int> uniform_subset(int n, int c, RngStream& rng);

}  // namespace paraac
