#include "paraac/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace paraac {

namespace {

uint64_t splitmix_mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

uint64_t splitmix_next(uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  return splitmix_mix(x);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(uint64_t master_seed, uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  uint64_t x = master_seed ^ splitmix_mix(stream_index + 0x9E3779B97F4A7C15ULL);
  for (auto& s : state_) s = splitmix_next(x);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

uint64_t RngStream::next_u64() {
  uint64_t result = rotl(state_[1] * 5, 7) * 9;
  uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

bool RngStream::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0,1]");
  return next_unit() < p;
}

uint64_t RngStream::next_below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below(0)");
  uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
  uint64_t x;
  do {
    x = next_u64();
  } while (x < threshold);
  return x % bound;
}

std::vector<int> uniform_subset(int n, int c, RngStream& rng) {
  if (c < 0 || c > n) throw std::invalid_argument("subset size outside [0,n]");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < c; ++i) {
    int j = i + int(rng.next_below(uint64_t(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(c);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace paraac
