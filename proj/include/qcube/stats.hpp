#pragma once

#include <cmath>
#include <cstdint>

namespace qcube {

struct RateEstimate {
  double rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

// Wilson score interval for a binomial proportion.
inline RateEstimate wilson_ci(std::uint64_t successes, std::uint64_t trials,
                              double z = 1.959963984540054) {
  RateEstimate e;
  e.successes = successes;
  e.trials = trials;
  if (trials == 0) return e;
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  e.rate = phat;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = phat + z2 / (2.0 * n);
  double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  e.ci_lo = (center - half) / denom;
  e.ci_hi = (center + half) / denom;
  return e;
}

inline double binomial_stderr(double p, std::uint64_t trials) {
  return trials ? std::sqrt(p * (1.0 - p) / static_cast<double>(trials)) : 0.0;
}

}  // namespace qcube
