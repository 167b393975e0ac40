#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace paraac {

// Parameters of the hash h_{p,q}(m) = (q*m mod p) mod k^2 with range
// {0, ..., k^2 - 1}.
struct HashParams {
  uint64_t p = 2;
  uint64_t q = 1;
  int k = 1;
};

uint64_t hash_value(const HashParams& params, uint64_t m);

// k^2 * log2(n): primes are admissible strictly below this value.
double hash_prime_bound(int k, uint64_t n);

std::vector<uint64_t> primes_below(uint64_t limit);

// Smallest (p,q) in lexicographic order with p prime, p < k^2 log2 n,
// 1 <= q < p and h_{p,q} injective on x. q = 0 is skipped: h_{p,0} is
// constant and can never separate a set of size >= 2. Existence is only
// guaranteed for sufficiently large n, so absence is reported, not an error.
std::optional<HashParams> find_injective_hash(const std::vector<uint64_t>& x, int k, uint64_t n);

// True iff at least k distinct elements of [universe_size] satisfy holds,
// decided the color-coding way: search for (p,q) and a coloring
// g: {0..k^2-1} -> {0..k-1} hitting every color with a satisfying element.
// Such a g exists iff h_{p,q} realizes at least k distinct hash values on
// the satisfying set, which is what the search tests. k = 0 is true by
// convention (zero witnesses always exist).
bool distinct_witness_decide(uint64_t universe_size, const std::function<bool(uint64_t)>& holds,
                             int k);

// Number of colorings the conceptual g-search ranges over: k^(k^2).
// Overflows for k >= 6 and throws there.
uint64_t g_function_count(int k);

}  // namespace paraac
