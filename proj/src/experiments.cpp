#include "qcube/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "qcube/branching.hpp"
#include "qcube/stats.hpp"

namespace qcube {

void parallel_trials(int trials, int threads,
                     const std::function<void(int)>& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || trials <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, trials);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
        fn(t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0, bool timing) {
  if (!timing) return 0;
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

void format_double(std::ostream& os, double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  os << buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<TrialRow>& rows) {
  os << "experiment,n,chi,k,trial,seed,gamma_size,c1,c2,u_n,lambda,runtime_ms\n";
  for (const auto& r : rows) {
    os << r.experiment << ',' << r.n << ',';
    format_double(os, r.chi);
    os << ',' << r.k << ',' << r.trial << ',' << r.seed << ','
       << r.gamma_size << ',' << r.c1 << ',' << r.c2 << ',' << r.u_n << ',';
    format_double(os, r.lambda);
    os << ',' << r.runtime_ms << '\n';
  }
}

std::vector<CellSummary> giant_sweep(const ExperimentConfig& config,
                                     std::vector<TrialRow>* rows) {
  std::vector<CellSummary> cells;
  for (int n : config.n_grid) {
    for (double chi : config.chi_grid) {
      CellSummary cell;
      cell.n = n;
      cell.chi = chi;
      double lambda = (1.0 + chi) / n;
      if (lambda < 0.0 || lambda > 0.5) {
        cell.rejected = true;
        cell.note = "lambda outside (0, 1/2] sanity gate";
        cells.push_back(cell);
        continue;
      }
      if (n > kDenseCap) {
        cell.rejected = true;
        cell.note = "n beyond dense cap";
        cells.push_back(cell);
        continue;
      }
      PercolationParams params = make_params(n, chi);
      int trials = config.trials;
      std::vector<TrialRow> local(trials);
      parallel_trials(trials, config.threads, [&](int t) {
        auto t0 = std::chrono::steady_clock::now();
        TrialSeed seed{config.master_seed, static_cast<std::uint64_t>(t)};
        OccupancySet gamma = sample_induced(params, seed);
        ComponentReport rep =
            analyze(gamma, config.thresholds.component_threshold);
        TrialRow row;
        row.experiment = "giant-sweep";
        row.n = n;
        row.chi = chi;
        row.k = config.k;
        row.trial = t;
        row.seed = config.master_seed;
        row.gamma_size = gamma.count();
        row.c1 = rep.c1;
        row.c2 = rep.c2;
        row.u_n = rep.threshold_complement;
        row.lambda = lambda;
        row.runtime_ms = elapsed_ms(t0, config.timing);
        local[t] = std::move(row);
      });

      double denom = lambda * std::ldexp(1.0, n);
      double sum_frac = 0.0, sum_sq = 0.0, sum_ratio = 0.0, sum_u = 0.0,
             sum_gamma_frac = 0.0;
      for (const auto& row : local) {
        double frac = row.c1 / denom;
        sum_frac += frac;
        sum_sq += frac * frac;
        sum_ratio += row.c1 ? static_cast<double>(row.c2) / row.c1 : 0.0;
        sum_u += row.gamma_size
                     ? static_cast<double>(row.u_n) / row.gamma_size
                     : 0.0;
        sum_gamma_frac +=
            row.gamma_size ? static_cast<double>(row.c1) / row.gamma_size : 0.0;
      }
      double mean = sum_frac / trials;
      double var = sum_sq / trials - mean * mean;
      double se = std::sqrt(std::max(var, 0.0) / trials);
      cell.mean_c1_fraction = mean;
      cell.mean_c1_gamma_fraction = sum_gamma_frac / trials;
      cell.ci_lo = mean - 1.96 * se;
      cell.ci_hi = mean + 1.96 * se;
      cell.mean_ratio_c2_c1 = sum_ratio / trials;
      cell.mean_u_fraction = sum_u / trials;
      cell.predictor_pi = 2.0 * chi;
      cell.predictor_alpha = chi > 0.0 ? alpha_of_epsilon(chi) : 0.0;
      cells.push_back(cell);
      if (rows) rows->insert(rows->end(), local.begin(), local.end());
    }
  }
  return cells;
}

double subcritical_expected_components(int n, double eps, std::uint64_t ell) {
  if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("0 < eps < 1");
  if (ell == 0 || n < 1) throw std::invalid_argument("ell, n >= 1");
  double log_bound = n * std::log(2.0) + ell * std::log1p(-eps) -
                     std::log(static_cast<double>(ell) * n);
  return std::exp(log_bound);
}

SprinkleSummary sprinkle_experiment(int n, double chi, int trials,
                                    std::uint64_t seed, int threads,
                                    std::vector<TrialRow>* rows) {
  if (trials < 1) throw std::invalid_argument("trials >= 1");
  SprinkleSummary sum;
  sum.n = n;
  sum.chi = chi;
  sum.trials = trials;
  sum.lambda1 = (1.0 + chi / 2.0) / n;
  sum.lambda2 = (chi / 2.0) / n;

  struct Trial {
    double pre_ratio = 0.0, post_ratio = 0.0;
    bool merged = false, improved = false;
    TrialRow row;
  };
  std::vector<Trial> local(trials);
  parallel_trials(trials, threads, [&](int t) {
    auto t0 = std::chrono::steady_clock::now();
    TrialSeed ts{seed, static_cast<std::uint64_t>(t)};
    auto [round1, combined] = sample_two_round(n, sum.lambda1, sum.lambda2, ts);
    ComponentReport pre = analyze(round1);
    ComponentReport post = analyze(combined);
    Trial& tr = local[t];
    tr.pre_ratio = pre.c1 ? static_cast<double>(pre.c2) / pre.c1 : 0.0;
    tr.post_ratio = post.c1 ? static_cast<double>(post.c2) / post.c1 : 0.0;
    tr.improved = tr.post_ratio <= tr.pre_ratio;
    // merged: round-1 top two components land in one combined component
    if (pre.c2 > 0) {
      ComponentLabels pre_labels = label_components(round1);
      ComponentLabels post_labels = label_components(combined);
      // representatives of the two largest round-1 components
      std::uint32_t l1 = UINT32_MAX, l2 = UINT32_MAX;
      for (std::uint32_t l = 0; l < pre_labels.component_size.size(); ++l) {
        if (pre_labels.component_size[l] == pre.c1 && l1 == UINT32_MAX) {
          l1 = l;
        } else if (pre_labels.component_size[l] == pre.c2) {
          l2 = l;
        }
      }
      Vertex rep1 = 0, rep2 = 0;
      std::uint64_t r = 0;
      bool got1 = false, got2 = false;
      round1.for_each([&](Vertex v) {
        if (!got1 && pre_labels.label_of_rank[r] == l1) {
          rep1 = v;
          got1 = true;
        }
        if (!got2 && pre_labels.label_of_rank[r] == l2) {
          rep2 = v;
          got2 = true;
        }
        ++r;
      });
      // ranks within the combined set
      std::uint64_t rank1 = 0, rank2 = 0;
      r = 0;
      combined.for_each([&](Vertex v) {
        if (v == rep1) rank1 = r;
        if (v == rep2) rank2 = r;
        ++r;
      });
      tr.merged = post_labels.label_of_rank[rank1] ==
                  post_labels.label_of_rank[rank2];
    }
    tr.row.experiment = "sprinkle";
    tr.row.n = n;
    tr.row.chi = chi;
    tr.row.trial = t;
    tr.row.seed = seed;
    tr.row.gamma_size = combined.count();
    tr.row.c1 = post.c1;
    tr.row.c2 = post.c2;
    tr.row.lambda = sum.lambda1;
    tr.row.runtime_ms = elapsed_ms(t0, false);
  });

  int merged = 0, improved = 0;
  for (const auto& tr : local) {
    sum.mean_pre_ratio += tr.pre_ratio / trials;
    sum.mean_post_ratio += tr.post_ratio / trials;
    merged += tr.merged;
    improved += tr.improved;
    if (rows) rows->push_back(tr.row);
  }
  sum.merge_frequency = static_cast<double>(merged) / trials;
  sum.ratio_improved_frequency = static_cast<double>(improved) / trials;
  return sum;
}

ConcentrationSummary u_concentration(int n, double chi, int k,
                                     std::uint64_t threshold, int trials,
                                     std::uint64_t seed, int threads,
                                     std::vector<TrialRow>* rows) {
  if (trials < 1) throw std::invalid_argument("trials >= 1");
  (void)k;  // recorded in rows; the threshold itself is caller-supplied
  ConcentrationSummary sum;
  sum.n = n;
  sum.chi = chi;
  sum.threshold = threshold;
  sum.trials = trials;
  PercolationParams params = make_params(n, chi);

  struct Trial {
    std::uint64_t u = 0;
    std::uint64_t isolated = 0;
    TrialRow row;
  };
  std::vector<Trial> local(trials);
  parallel_trials(trials, threads, [&](int t) {
    TrialSeed ts{seed, static_cast<std::uint64_t>(t)};
    OccupancySet gamma = sample_induced(params, ts);
    ComponentReport rep = analyze(gamma, threshold);
    Trial& tr = local[t];
    tr.u = rep.threshold_complement;
    gamma.for_each([&](Vertex v) {
      for (int i = 0; i < n; ++i) {
        if (gamma.test(v ^ (Vertex{1} << i))) return;
      }
      ++tr.isolated;
    });
    tr.row.experiment = "u-concentration";
    tr.row.n = n;
    tr.row.chi = chi;
    tr.row.k = k;
    tr.row.trial = t;
    tr.row.seed = seed;
    tr.row.gamma_size = gamma.count();
    tr.row.c1 = rep.c1;
    tr.row.c2 = rep.c2;
    tr.row.u_n = rep.threshold_complement;
    tr.row.lambda = params.lambda;
  });

  double mean = 0.0;
  sum.min_u = UINT64_MAX;
  for (const auto& tr : local) {
    mean += static_cast<double>(tr.u) / trials;
    sum.min_u = std::min(sum.min_u, tr.u);
    sum.max_u = std::max(sum.max_u, tr.u);
    if (threshold > 1 && tr.u < tr.isolated) sum.isolated_bound_ok = false;
    if (rows) rows->push_back(tr.row);
  }
  sum.mean_u = mean;
  int deviations = 0;
  for (const auto& tr : local) {
    if (mean > 0.0 &&
        std::abs(static_cast<double>(tr.u) - mean) > mean / n) {
      ++deviations;
    }
  }
  sum.deviation_frequency = static_cast<double>(deviations) / trials;
  return sum;
}

}  // namespace qcube
