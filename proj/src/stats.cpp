#include "paraac/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paraac {

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("bad binomial counts");
  double n = double(trials);
  double phat = double(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return WilsonInterval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace paraac
