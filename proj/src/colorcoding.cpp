#include "paraac/colorcoding.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace paraac {

uint64_t hash_value(const HashParams& params, uint64_t m) {
  if (params.p < 2 || params.q >= params.p) throw std::invalid_argument("bad hash parameters");
  if (params.k < 1) throw std::invalid_argument("k must be positive");
  // q < p keeps q * (m mod p) below p^2; p stays far under 2^32 here
  uint64_t prod = params.q * (m % params.p) % params.p;
  return prod % (uint64_t(params.k) * params.k);
}

double hash_prime_bound(int k, uint64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1 and n >= 1");
  return double(k) * double(k) * std::log2(double(n));
}

std::vector<uint64_t> primes_below(uint64_t limit) {
  std::vector<uint64_t> out;
  if (limit <= 2) return out;
  std::vector<bool> composite(limit, false);
  for (uint64_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j < limit; j += i) composite[j] = true;
  }
  return out;
}

std::optional<HashParams> find_injective_hash(const std::vector<uint64_t>& x, int k, uint64_t n) {
  if (int(x.size()) != k) throw std::invalid_argument("|x| must equal k");
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (uint64_t m : x)
    if (m < 1 || m > n) throw std::invalid_argument("set member outside [n]");
  double bound = hash_prime_bound(k, n);
  for (uint64_t p : primes_below(uint64_t(std::ceil(bound)) + 1)) {
    if (!(double(p) < bound)) break;
    for (uint64_t q = 1; q < p; ++q) {
      HashParams params{p, q, k};
      std::set<uint64_t> seen;
      bool injective = true;
      for (uint64_t m : x)
        if (!seen.insert(hash_value(params, m)).second) {
          injective = false;
          break;
        }
      if (injective) return params;
    }
  }
  return std::nullopt;
}

bool distinct_witness_decide(uint64_t universe_size, const std::function<bool(uint64_t)>& holds,
                             int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return true;
  std::vector<uint64_t> satisfying;
  for (uint64_t u = 1; u <= universe_size; ++u)
    if (holds(u)) satisfying.push_back(u);
  if (satisfying.empty()) return false;
  // The prime bound is the lemma's completeness guarantee for large n, not a
  // soundness constraint: any (p,q) that separates k satisfying elements is a
  // valid witness. Keeping p = 2 admissible makes tiny universes exact.
  double bound = std::max(3.0, hash_prime_bound(k, universe_size == 0 ? 1 : universe_size));
  uint64_t classes = uint64_t(k) * k;
  std::vector<int> stamp(classes, -1);
  int generation = 0;
  for (uint64_t p : primes_below(uint64_t(std::ceil(bound)) + 1)) {
    if (!(double(p) <= bound)) break;
    for (uint64_t q = 1; q < p; ++q) {
      HashParams params{p, q, k};
      // a coloring g hitting every color with a satisfying element exists
      // iff at least k hash classes are realized on the satisfying set
      int realized = 0;
      ++generation;
      for (uint64_t m : satisfying) {
        uint64_t h = hash_value(params, m);
        if (stamp[h] != generation) {
          stamp[h] = generation;
          if (++realized >= k) return true;
        }
      }
    }
  }
  return false;
}

uint64_t g_function_count(int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return 1;  // empty function
  uint64_t result = 1;
  uint64_t base = uint64_t(k);
  for (int i = 0; i < k * k; ++i) {
    if (result > UINT64_MAX / base) throw std::overflow_error("k^(k^2) exceeds 64 bits");
    result *= base;
  }
  return result;
}

}  // namespace paraac
