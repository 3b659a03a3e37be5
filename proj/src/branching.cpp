#include "qcube/branching.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qcube/sampling.hpp"

namespace qcube {

OffspringLaw OffspringLaw::binomial(std::int64_t m, double p) {
  if (m < 0 || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("Binomial law requires m >= 0, p in [0,1]");
  }
  OffspringLaw law;
  law.kind = Kind::kBinomial;
  law.m = m;
  law.p = p;
  return law;
}

OffspringLaw OffspringLaw::poisson(double mu) {
  if (mu < 0.0) throw std::invalid_argument("Poisson law requires mu >= 0");
  OffspringLaw law;
  law.kind = Kind::kPoisson;
  law.mu = mu;
  return law;
}

double OffspringLaw::mean() const {
  return kind == Kind::kBinomial ? m * p : mu;
}

double pmf(const OffspringLaw& law, std::int64_t ell) {
  if (ell < 0) throw std::invalid_argument("pmf: ell >= 0");
  if (law.kind == OffspringLaw::Kind::kBinomial) {
    if (ell > law.m) return 0.0;
    if (law.p == 0.0) return ell == 0 ? 1.0 : 0.0;
    if (law.p == 1.0) return ell == law.m ? 1.0 : 0.0;
    double lp = std::lgamma(law.m + 1.0) - std::lgamma(ell + 1.0) -
                std::lgamma(law.m - ell + 1.0) + ell * std::log(law.p) +
                (law.m - ell) * std::log1p(-law.p);
    return std::exp(lp);
  }
  if (law.mu == 0.0) return ell == 0 ? 1.0 : 0.0;
  return std::exp(-law.mu + ell * std::log(law.mu) - std::lgamma(ell + 1.0));
}

double pgf(const OffspringLaw& law, double q) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("pgf: q in [0,1]");
  if (law.kind == OffspringLaw::Kind::kBinomial) {
    return std::pow(1.0 - law.p + law.p * q, static_cast<double>(law.m));
  }
  return std::exp(law.mu * (q - 1.0));
}

SurvivalResult survival_probability(const OffspringLaw& law, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  SurvivalResult res;
  if (law.mean() <= 1.0) {
    // smallest fixed point is 1 for (sub)critical laws
    res.extinction = 1.0;
    res.survival = 0.0;
    res.residual = 0.0;
    return res;
  }
  constexpr int kMaxIter = 5'000'000;
  double q = 0.0;
  int t = 0;
  for (; t < kMaxIter; ++t) {
    double next = pgf(law, q);
    double step = std::abs(next - q);
    q = next;
    if (step < tol) break;
  }
  res.iterations = t;
  res.extinction = q;
  res.survival = 1.0 - q;
  res.residual = std::abs(q - pgf(law, q));
  if (t >= kMaxIter) {
    throw std::runtime_error("survival fixed point did not converge; residual " +
                             std::to_string(res.residual));
  }
  return res;
}

double alpha_of_epsilon(double eps, double tol) {
  if (eps <= 0.0) throw std::invalid_argument("alpha_of_epsilon: eps > 0");
  if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
  auto f = [eps](double a) { return 1.0 - std::exp(-(1.0 + eps) * a) - a; };
  // f > 0 just right of 0 (slope eps), f(1) < 0
  double lo = 1e-16;
  double hi = 1.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

PiChi pi_chi(int n, double chi, Regime regime) {
  if (chi <= 0.0) throw std::invalid_argument("pi_chi: chi > 0");
  if (n < 2) throw std::invalid_argument("pi_chi: n >= 2");
  PiChi out;
  double unn = std::cbrt(static_cast<double>(n));
  unn *= unn;
  std::int64_t m = n - static_cast<std::int64_t>(std::floor(0.75 * unn + 1e-9));
  if (m < 0) m = 0;
  out.finite_n =
      survival_probability(OffspringLaw::binomial(m, (1.0 + chi) / n)).survival;
  out.asymptotic =
      regime == Regime::kConstant ? alpha_of_epsilon(chi) : 2.0 * chi;
  return out;
}

GWTrace simulate_gw(const OffspringLaw& law, std::uint64_t generation_cap,
                    std::uint64_t total_cap, std::uint64_t seed) {
  if (generation_cap == 0 || total_cap == 0) {
    throw std::invalid_argument("caps must be positive");
  }
  std::mt19937_64 rng(mix64(seed));
  GWTrace trace;
  std::uint64_t z = 1;
  trace.generation_sizes.push_back(z);
  trace.total = 1;
  for (std::uint64_t t = 0; t < generation_cap; ++t) {
    if (trace.total >= total_cap) {
      trace.survived = true;
      return trace;
    }
    std::uint64_t next;
    if (law.kind == OffspringLaw::Kind::kBinomial) {
      std::binomial_distribution<std::uint64_t> dist(z * law.m, law.p);
      next = dist(rng);
    } else {
      std::poisson_distribution<std::uint64_t> dist(z * law.mu);
      next = dist(rng);
    }
    trace.generation_sizes.push_back(next);
    trace.total += next;
    z = next;
    if (trace.total >= total_cap) {
      trace.survived = true;
      return trace;
    }
    if (z == 0) return trace;  // extinct
  }
  trace.survived = true;  // alive at the generation cap
  return trace;
}

double tree_component_survival(int n, double lambda, double tol,
                               bool conditioned) {
  if (n < 1) throw std::invalid_argument("n >= 1");
  if (lambda < 0.0 || lambda > 1.0) {
    throw std::invalid_argument("lambda must lie in [0,1]");
  }
  OffspringLaw interior = OffspringLaw::binomial(n - 1, lambda);
  double q = survival_probability(interior, tol).extinction;
  double surv = 1.0 - pgf(OffspringLaw::binomial(n, lambda), q);
  return conditioned ? surv : lambda * surv;
}

double chernoff_bound(double eta, double expectation) {
  if (eta <= 0.0) throw std::invalid_argument("eta > 0");
  if (expectation < 0.0) throw std::invalid_argument("expectation >= 0");
  double c = std::min((1.0 + eta) * std::log1p(eta) - eta, eta * eta / 2.0);
  return 2.0 * std::exp(-c * expectation);
}

}  // namespace qcube
