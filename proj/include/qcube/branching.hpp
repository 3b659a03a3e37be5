#pragma once

#include <cstdint>
#include <vector>

namespace qcube {

enum class Regime { kConstant, kVanishing };

// Binomial(m,p) or Poisson(mu) offspring law.
struct OffspringLaw {
  enum class Kind { kBinomial, kPoisson } kind;
  std::int64_t m = 0;
  double p = 0.0;
  double mu = 0.0;

  static OffspringLaw binomial(std::int64_t m, double p);
  static OffspringLaw poisson(double mu);
  double mean() const;
};

double pmf(const OffspringLaw& law, std::int64_t ell);

// E[q^xi]; monotone nondecreasing and convex on [0,1], pgf(law,1)=1.
double pgf(const OffspringLaw& law, double q);

struct SurvivalResult {
  double survival = 0.0;
  double extinction = 1.0;  // smallest fixed point of the PGF in [0,1]
  int iterations = 0;
  double residual = 0.0;    // |q - pgf(q)| at termination
};

// Extinction via monotone iteration q <- pgf(q) from q=0, which converges
// to the smallest fixed point.  Subcritical/critical laws short-circuit to
// extinction 1 (standard PGF theory).
SurvivalResult survival_probability(const OffspringLaw& law,
                                    double tol = 1e-12);

// Unique root in (0,1) of alpha = 1 - exp(-(1+eps)*alpha), by bisection.
// Equals the Poisson(1+eps) survival probability; kept as an independent
// route for cross-checks.
double alpha_of_epsilon(double eps, double tol = 1e-14);

struct PiChi {
  double finite_n = 0.0;    // survival of Binomial(m, (1+chi)/n)
  double asymptotic = 0.0;  // alpha(chi) or 2*chi by regime
};

// pi(chi_n): finite-n fixed point with m = n - floor((3/4) n^(2/3)),
// alongside the asymptotic value for the chosen regime.
PiChi pi_chi(int n, double chi, Regime regime);

struct GWTrace {
  std::vector<std::uint64_t> generation_sizes;  // Z_0 = 1, Z_1, ...
  bool survived = false;  // still alive when a cap was hit
  std::uint64_t total = 0;
};

// Galton-Watson simulation with a generation cap and a total-progeny cap;
// per-generation aggregate draws (sum of iid Binomials is Binomial).
GWTrace simulate_gw(const OffspringLaw& law, std::uint64_t generation_cap,
                    std::uint64_t total_cap, std::uint64_t seed);

// Survival of the rooted-tree comparison process: root offspring
// Binomial(n, lambda), interior Binomial(n-1, lambda).  The conditioned
// variant assumes the root occupied.
double tree_component_survival(int n, double lambda, double tol = 1e-12,
                               bool conditioned = true);

// Two-sided Chernoff bound 2*exp(-c_eta * E) with
// c_eta = min((1+eta)ln(1+eta) - eta, eta^2/2).
double chernoff_bound(double eta, double expectation);

}  // namespace qcube
