#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "qcube/components.hpp"
#include "qcube/sampling.hpp"

namespace qcube {

struct Thresholds {
  std::uint64_t component_threshold = 2;
  double delta = 0.1;
  double rho_k = 1.0;  // free constants, non-normative defaults
  double c_k = 1.0;
};

struct ExperimentConfig {
  std::vector<int> n_grid;
  std::vector<double> chi_grid;
  int k = 1;
  int trials = 50;
  std::uint64_t master_seed = 0;
  Thresholds thresholds;
  int threads = 1;
  bool timing = false;  // off by default so output stays byte-reproducible
};

// One flat output row; the fixed CSV schema shared by the sweep-style
// subcommands.
struct TrialRow {
  std::string experiment;
  int n = 0;
  double chi = 0.0;
  int k = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t gamma_size = 0;
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;
  std::uint64_t u_n = 0;
  double lambda = 0.0;
  std::int64_t runtime_ms = 0;
};

void write_csv(std::ostream& os, const std::vector<TrialRow>& rows);

struct CellSummary {
  int n = 0;
  double chi = 0.0;
  double mean_c1_fraction = 0.0;  // C1 / (lambda 2^n), the limit-law scale
  double mean_c1_gamma_fraction = 0.0;  // C1 / |Gamma|
  double ci_lo = 0.0;
  double ci_hi = 0.0;  // normal interval on mean_c1_fraction
  double mean_ratio_c2_c1 = 0.0;
  double mean_u_fraction = 0.0;
  double predictor_pi = 0.0;     // 2*chi (vanishing-regime form)
  double predictor_alpha = 0.0;  // alpha(chi) (constant-regime form)
  bool rejected = false;
  std::string note;
};

// Seeded sweep over (n, chi) cells; cells with lambda > 1/2 are rejected
// and the rest proceed.  Deterministic given the config.
std::vector<CellSummary> giant_sweep(const ExperimentConfig& config,
                                     std::vector<TrialRow>* rows = nullptr);

// The subcritical first-moment bound (1/(ell*n)) 2^n (1-eps)^ell.
double subcritical_expected_components(int n, double eps, std::uint64_t ell);

struct SprinkleSummary {
  int n = 0;
  double chi = 0.0;
  int trials = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double merge_frequency = 0.0;   // round-1 top two merged after round 2
  double mean_pre_ratio = 0.0;    // C2/C1 before sprinkling
  double mean_post_ratio = 0.0;   // C2/C1 after
  double ratio_improved_frequency = 0.0;
};

SprinkleSummary sprinkle_experiment(int n, double chi, int trials,
                                    std::uint64_t seed, int threads = 1,
                                    std::vector<TrialRow>* rows = nullptr);

struct ConcentrationSummary {
  int n = 0;
  double chi = 0.0;
  std::uint64_t threshold = 0;
  int trials = 0;
  double mean_u = 0.0;
  double deviation_frequency = 0.0;  // relative deviation > 1/n
  std::uint64_t min_u = 0;
  std::uint64_t max_u = 0;
  bool isolated_bound_ok = true;  // |U_n| >= #isolated occupied, every trial
};

ConcentrationSummary u_concentration(int n, double chi, int k,
                                     std::uint64_t threshold, int trials,
                                     std::uint64_t seed, int threads = 1,
                                     std::vector<TrialRow>* rows = nullptr);

// Deterministic fan-out: runs fn(trial) on a pool, results land by index.
void parallel_trials(int trials, int threads,
                     const std::function<void(int)>& fn);

}  // namespace qcube
