#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qcube/branching.hpp"
#include "qcube/hypercube.hpp"
#include "qcube/sampling.hpp"
#include "qcube/stats.hpp"

namespace qcube {

// Lazily sampled, memoized occupancy of a single trial.  Coins are flipped
// on first query and cached, so the construction can run at n far beyond
// the dense cap while staying consistent with one global sample.
class OccupancyOracle {
 public:
  OccupancyOracle(const PercolationParams& params, const TrialSeed& seed)
      : params_(params), seed_(seed) {}

  bool occupied(Vertex v) {
    ++queries_;
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    bool occ = vertex_coin(seed_, v, 0) < params_.lambda;
    memo_.emplace(v, occ);
    return occ;
  }

  // Pin a vertex's occupancy (used to condition on an occupied start).
  void force(Vertex v, bool occ) { memo_[v] = occ; }

  std::uint64_t queries() const { return queries_; }
  const PercolationParams& params() const { return params_; }

 private:
  PercolationParams params_;
  TrialSeed seed_;
  std::unordered_map<Vertex, bool> memo_;
  std::uint64_t queries_ = 0;
};

struct GammaOutcome {
  bool success = false;
  std::vector<Vertex> component;   // tree (selection) order, start first
  std::uint64_t queried = 0;       // oracle examinations
  std::vector<int> directions_used;  // tail coordinates consumed, in order
  int target = 0;                  // floor((1/4) u_n n)
  bool ran_short = false;          // an expansion had fewer than m directions
};

// The seeded tree-growing exploration confined to the tail coordinates:
// expand the smallest pending vertex, examine its m smallest neighbors
// along still-unused tail directions, keep each with probability lambda.
// Succeeds when the component reaches the target size.
GammaOutcome gamma_process(const CoordinateLayout& layout, Vertex start,
                           OccupancyOracle& oracle, int target_override = 0);

struct GrowthOutcome {
  int stages = 0;
  GammaOutcome c0;
  // added_sets[i-1] holds the stage-i gamma-subcomponents
  std::vector<std::vector<std::vector<Vertex>>> added_sets;
  std::vector<std::uint64_t> stage_counts;  // X~_1 .. X~_k
  std::uint64_t total_size = 0;
  bool success = false;
};

// k-stage growth: translate each stage-(i-1) set by the block-i units,
// probe the translate for an occupied vertex (smallest hit first) and
// launch a fresh gamma-process there.  Success iff every stage count is
// positive.
GrowthOutcome grow_subcomponent(const CoordinateLayout& layout, Vertex start,
                                OccupancyOracle& oracle);

// phi_n = pi(chi) * nu_n * (1 - exp(-(1+chi) u_n / 4)).
double phi_n(int n, int k, double chi, Regime regime = Regime::kConstant);

// pi_k = pi(chi) * (1 - exp(-rho_k * phi_n)); rho_k is a free positive
// parameter (existence-only in the analysis).
double pi_k(int n, int k, double chi, double rho_k,
            Regime regime = Regime::kConstant);

// Occupied vertices lying in components of size >= threshold; the
// complement within Gamma is U_n.
OccupancySet extract_gamma_nk(const OccupancySet& gamma,
                              std::uint64_t threshold);

struct SuccessRates {
  RateEstimate gamma;
  RateEstimate growth;
};

// Monte Carlo success frequencies of the gamma-process and the staged
// growth, one memoized oracle per trial, start conditioned occupied.
SuccessRates success_rate(const PercolationParams& params,
                          const CoordinateLayout& layout, int trials,
                          std::uint64_t master_seed);

}  // namespace qcube
