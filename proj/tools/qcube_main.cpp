// Command-line front end: seeded percolation experiments on the binary
// n-cube with reproducible CSV/JSON output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qcube/boundary.hpp"
#include "qcube/branching.hpp"
#include "qcube/components.hpp"
#include "qcube/constructions.hpp"
#include "qcube/experiments.hpp"
#include "qcube/hypercube.hpp"
#include "qcube/sampling.hpp"

using nlohmann::json;

namespace {

constexpr int kExitInvariant = 2;
constexpr int kExitResource = 3;

struct GlobalOpts {
  std::string seed_text = "0";
  int threads = 1;
  std::string out_csv;
  std::string out_json;
  bool timing = false;

  std::uint64_t seed() const {
    return std::stoull(seed_text, nullptr, 0);  // decimal or 0x-hex
  }
};

void emit(const GlobalOpts& g, const json& summary,
          const std::vector<qcube::TrialRow>& rows) {
  std::string text = summary.dump(2);
  std::cout << text << "\n";
  if (!g.out_json.empty()) {
    std::ofstream f(g.out_json, std::ios::binary);
    f << text << "\n";
  }
  if (!g.out_csv.empty()) {
    std::ofstream f(g.out_csv, std::ios::binary);
    qcube::write_csv(f, rows);
  }
}

json layout_json(const qcube::CoordinateLayout& lay) {
  return json{{"n", lay.n},         {"k", lay.k},
              {"u_n", lay.u_n},     {"nu_n", lay.nu_n},
              {"iota_n", lay.iota_n}, {"z_n", lay.z_n},
              {"m", lay.m},         {"gamma_target", lay.gamma_target}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex-percolation laboratory for the binary n-cube"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand
  app.set_config("--config")->configurable(false);

  GlobalOpts g;
  app.add_option("--seed", g.seed_text, "master seed (decimal or 0x-hex)")
      ->configurable(true);
  app.add_option("--threads", g.threads, "worker threads for trial fan-out");
  app.add_option("--out-csv", g.out_csv, "per-trial CSV output path");
  app.add_option("--out-json", g.out_json, "JSON summary output path");
  app.add_flag("--timing", g.timing,
               "record wall-clock runtime_ms (off keeps output reproducible)");

  int n = 16, k = 1, trials = 100;
  double chi = 0.3, delta = 0.1, rho_k = 1.0;
  std::uint64_t threshold = 2;
  int audit_sets = 100;

  auto* simulate = app.add_subcommand("simulate", "sample and analyze trials");
  simulate->add_option("--n", n)->required();
  simulate->add_option("--chi", chi)->required();
  simulate->add_option("--trials", trials);
  simulate->add_option("--threshold", threshold);

  auto* sweep = app.add_subcommand("giant-sweep", "largest-component sweep");
  std::vector<int> n_grid{14, 16, 18, 20};
  std::vector<double> chi_grid{0.3};
  sweep->add_option("--n-grid", n_grid)->delimiter(',');
  sweep->add_option("--chi-grid", chi_grid)->delimiter(',');
  sweep->add_option("--trials", trials);
  sweep->add_option("--k", k);
  sweep->add_option("--threshold", threshold);

  auto* survival = app.add_subcommand("survival", "branching survival record");
  survival->add_option("--n", n)->required();
  survival->add_option("--chi", chi)->required();

  auto* gamma_stats = app.add_subcommand("gamma-stats",
                                         "gamma-process success rates");
  gamma_stats->add_option("--n", n)->required();
  gamma_stats->add_option("--k", k);
  gamma_stats->add_option("--chi", chi)->required();
  gamma_stats->add_option("--trials", trials);
  gamma_stats->add_option("--rho-k", rho_k);

  auto* boundary_audit =
      app.add_subcommand("boundary-audit", "Sidon sum and direction sweeps");
  boundary_audit->add_option("--n", n)->required();
  boundary_audit->add_option("--sets", audit_sets);
  boundary_audit->add_option("--chi", chi);

  auto* density_audit =
      app.add_subcommand("density-audit", "2-sphere density of Gamma_{n,k}");
  density_audit->add_option("--n", n)->required();
  density_audit->add_option("--k", k);
  density_audit->add_option("--chi", chi)->required();
  density_audit->add_option("--delta", delta);
  density_audit->add_option("--trials", trials);
  density_audit->add_option("--threshold", threshold);

  auto* sprinkle = app.add_subcommand("sprinkle", "two-round randomization");
  sprinkle->add_option("--n", n)->required();
  sprinkle->add_option("--chi", chi)->required();
  sprinkle->add_option("--trials", trials);

  auto* u_conc =
      app.add_subcommand("u-concentration", "small-component complement");
  u_conc->add_option("--n", n)->required();
  u_conc->add_option("--chi", chi)->required();
  u_conc->add_option("--k", k);
  u_conc->add_option("--threshold", threshold);
  u_conc->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<qcube::TrialRow> rows;

    if (*simulate) {
      qcube::PercolationParams params = qcube::make_params(n, chi);
      double sum_c1 = 0.0;
      for (int t = 0; t < trials; ++t) {
        qcube::TrialSeed seed{g.seed(), static_cast<std::uint64_t>(t)};
        qcube::OccupancySet gamma = qcube::sample_induced(params, seed);
        qcube::ComponentReport rep = qcube::analyze(gamma, threshold);
        if (rep.total != gamma.count()) {
          std::cerr << "invariant violated: component sizes do not partition "
                       "Gamma\n";
          return kExitInvariant;
        }
        qcube::TrialRow row;
        row.experiment = "simulate";
        row.n = n;
        row.chi = chi;
        row.trial = t;
        row.seed = g.seed();
        row.gamma_size = gamma.count();
        row.c1 = rep.c1;
        row.c2 = rep.c2;
        row.u_n = rep.threshold_complement;
        row.lambda = params.lambda;
        rows.push_back(row);
        sum_c1 += static_cast<double>(rep.c1);
      }
      json summary{{"experiment", "simulate"},
                   {"n", n},
                   {"chi", chi},
                   {"lambda", params.lambda},
                   {"trials", trials},
                   {"mean_c1", sum_c1 / trials}};
      emit(g, summary, rows);
    } else if (*sweep) {
      qcube::ExperimentConfig config;
      config.n_grid = n_grid;
      config.chi_grid = chi_grid;
      config.k = k;
      config.trials = trials;
      config.master_seed = g.seed();
      config.thresholds.component_threshold = threshold;
      config.threads = g.threads;
      config.timing = g.timing;
      auto cells = qcube::giant_sweep(config, &rows);
      json cells_json = json::array();
      for (const auto& c : cells) {
        cells_json.push_back(json{{"n", c.n},
                                  {"chi", c.chi},
                                  {"mean_c1_fraction", c.mean_c1_fraction},
                                  {"mean_c1_gamma_fraction",
                                   c.mean_c1_gamma_fraction},
                                  {"ci", {c.ci_lo, c.ci_hi}},
                                  {"mean_ratio_c2_c1", c.mean_ratio_c2_c1},
                                  {"mean_u_fraction", c.mean_u_fraction},
                                  {"predictor_pi", c.predictor_pi},
                                  {"predictor_alpha", c.predictor_alpha},
                                  {"rejected", c.rejected},
                                  {"note", c.note}});
      }
      emit(g, json{{"experiment", "giant-sweep"}, {"cells", cells_json}}, rows);
    } else if (*survival) {
      qcube::PiChi pc = qcube::pi_chi(n, chi, qcube::Regime::kConstant);
      double unn = std::cbrt(static_cast<double>(n));
      unn *= unn;
      std::int64_t m =
          n - static_cast<std::int64_t>(std::floor(0.75 * unn + 1e-9));
      auto res = qcube::survival_probability(
          qcube::OffspringLaw::binomial(m, (1.0 + chi) / n));
      json summary{{"n", n},
                   {"chi", chi},
                   {"finite_n", pc.finite_n},
                   {"asymptotic_vanishing", 2.0 * chi},
                   {"alpha", pc.asymptotic},
                   {"solver_residual", res.residual}};
      emit(g, summary, rows);
    } else if (*gamma_stats) {
      qcube::CoordinateLayout lay = qcube::make_layout(n, k);
      qcube::PercolationParams params = qcube::make_params(n, chi);
      qcube::SuccessRates rates =
          qcube::success_rate(params, lay, trials, g.seed());
      json summary{{"experiment", "gamma-stats"},
                   {"trials", trials},
                   {"success_rate",
                    {{"gamma", rates.gamma.rate},
                     {"gamma_ci", {rates.gamma.ci_lo, rates.gamma.ci_hi}},
                     {"growth", rates.growth.rate},
                     {"growth_ci", {rates.growth.ci_lo, rates.growth.ci_hi}}}},
                   {"pi_asymptotic",
                    qcube::pi_chi(n, chi, qcube::Regime::kConstant).asymptotic},
                   {"pi_k", qcube::pi_k(n, k, chi, rho_k)},
                   {"layout", layout_json(lay)}};
      emit(g, summary, rows);
    } else if (*boundary_audit) {
      qcube::CubeGeometry geom(n);
      std::uint64_t violations = 0;
      for (int t = 0; t < audit_sets; ++t) {
        qcube::TrialSeed seed{g.seed(), static_cast<std::uint64_t>(t)};
        qcube::OccupancySet a(geom);
        std::uint64_t universe = geom.vertex_count();
        for (qcube::Vertex v = 0; v < universe; ++v) {
          if (qcube::vertex_coin(seed, v, 7) < 0.5) a.insert(v);
        }
        if (a.empty() || a.count() == universe) continue;
        std::uint64_t sidon = qcube::sidon_sum(a);
        if (sidon != a.count() * a.count()) ++violations;
        auto [dir, displaced] = qcube::best_direction(a);
        qcube::TrialRow row;
        row.experiment = "boundary-audit";
        row.n = n;
        row.trial = t;
        row.seed = g.seed();
        row.gamma_size = a.count();
        row.c1 = sidon;
        row.c2 = displaced;
        row.u_n = static_cast<std::uint64_t>(dir);
        rows.push_back(row);
      }
      if (violations) {
        std::cerr << "invariant violated: Sidon identity failed\n";
        return kExitInvariant;
      }
      emit(g,
           json{{"experiment", "boundary-audit"},
                {"n", n},
                {"sets", audit_sets},
                {"sidon_violations", violations}},
           rows);
    } else if (*density_audit) {
      qcube::PercolationParams params = qcube::make_params(n, chi);
      double frac_sum = 0.0;
      for (int t = 0; t < trials; ++t) {
        qcube::TrialSeed seed{g.seed(), static_cast<std::uint64_t>(t)};
        qcube::OccupancySet gamma = qcube::sample_induced(params, seed);
        qcube::OccupancySet gnk = qcube::extract_gamma_nk(gamma, threshold);
        qcube::DensityReport rep = qcube::density_report(gnk, k, delta);
        double frac = static_cast<double>(rep.d_delta_size) /
                      static_cast<double>(gamma.universe());
        frac_sum += frac;
        qcube::TrialRow row;
        row.experiment = "density-audit";
        row.n = n;
        row.chi = chi;
        row.k = k;
        row.trial = t;
        row.seed = g.seed();
        row.gamma_size = gnk.count();
        row.u_n = rep.d_delta_size;
        row.lambda = params.lambda;
        rows.push_back(row);
      }
      emit(g,
           json{{"experiment", "density-audit"},
                {"n", n},
                {"k", k},
                {"delta", delta},
                {"trials", trials},
                {"mean_d_delta_fraction", frac_sum / trials}},
           rows);
    } else if (*sprinkle) {
      auto summary =
          qcube::sprinkle_experiment(n, chi, trials, g.seed(), g.threads,
                                     &rows);
      emit(g,
           json{{"experiment", "sprinkle"},
                {"n", summary.n},
                {"chi", summary.chi},
                {"trials", summary.trials},
                {"lambda1", summary.lambda1},
                {"lambda2", summary.lambda2},
                {"merge_frequency", summary.merge_frequency},
                {"mean_pre_ratio", summary.mean_pre_ratio},
                {"mean_post_ratio", summary.mean_post_ratio},
                {"ratio_improved_frequency",
                 summary.ratio_improved_frequency}},
           rows);
    } else if (*u_conc) {
      auto summary = qcube::u_concentration(n, chi, k, threshold, trials,
                                            g.seed(), g.threads, &rows);
      if (!summary.isolated_bound_ok) {
        std::cerr << "invariant violated: |U_n| below isolated-vertex count\n";
        return kExitInvariant;
      }
      emit(g,
           json{{"experiment", "u-concentration"},
                {"n", summary.n},
                {"chi", summary.chi},
                {"threshold", summary.threshold},
                {"trials", summary.trials},
                {"mean_u", summary.mean_u},
                {"deviation_frequency", summary.deviation_frequency},
                {"min_u", summary.min_u},
                {"max_u", summary.max_u}},
           rows);
    }
  } catch (const std::bad_alloc&) {
    std::cerr << "resource cap exceeded\n";
    return kExitResource;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
