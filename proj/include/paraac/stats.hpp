#pragma once

namespace paraac {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval for a binomial proportion.
WilsonInterval wilson_interval(long long successes, long long trials, double z);

// z for a two-sided 99% interval
inline constexpr double kZ99 = 2.5758293035489004;

inline WilsonInterval wilson_99(long long successes, long long trials) {
  return wilson_interval(successes, trials, kZ99);
}

}  // namespace paraac
