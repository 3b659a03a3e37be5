#pragma once

#include <cstdint>
#include <utility>

#include "qcube/hypercube.hpp"

namespace qcube {

struct PercolationParams {
  int n = 0;
  double chi = 0.0;
  double lambda = 0.0;  // (1+chi)/n, stored exactly as derived
  double delta = 0.0;   // schedule exponent, informational
};

// Validates 0 <= (1+chi)/n <= 1; chi may be negative for subcritical runs.
PercolationParams make_params(int n, double chi, double delta = 0.0);

struct TrialSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

// SplitMix64 finalizer; the basis of the counter-based coin streams.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t a, std::uint64_t b,
                                  std::uint64_t c, std::uint64_t d) {
  std::uint64_t h = mix64(a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  h = mix64(h ^ d);
  return h;
}

// Uniform [0,1) coin for one vertex; a pure function of
// (master_seed, trial_index, stream, vertex) -- no stream state.
inline double vertex_coin(const TrialSeed& seed, Vertex v,
                          std::uint64_t stream = 0) {
  std::uint64_t h = counter_hash(seed.master_seed, seed.trial_index, stream, v);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// One induced subgraph: each vertex kept independently with probability
// lambda.  Deterministic given the seed.
OccupancySet sample_induced(const PercolationParams& params,
                            const TrialSeed& seed);

// Two-round sprinkling: round 1 at lambda1, an independent round 2 at
// lambda2; combined inclusion probability is 1-(1-l1)(1-l2).
std::pair<OccupancySet, OccupancySet> sample_two_round(int n, double lambda1,
                                                       double lambda2,
                                                       const TrialSeed& seed);

// The perturbation schedule chi_n = n^(-1/3+delta), 0 < delta < 1/3.
double chi_schedule(int n, double delta);

}  // namespace qcube
