#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qcube/branching.hpp"
#include "qcube/stats.hpp"

using namespace qcube;

TEST_CASE("offspring law construction and means") {
  OffspringLaw b = OffspringLaw::binomial(50, 0.03);
  CHECK(b.mean() == doctest::Approx(1.5));
  OffspringLaw p = OffspringLaw::poisson(1.3);
  CHECK(p.mean() == doctest::Approx(1.3));
  CHECK_THROWS_AS(OffspringLaw::binomial(-1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(OffspringLaw::binomial(5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(OffspringLaw::poisson(-0.1), std::invalid_argument);
}

TEST_CASE("pmf sums to one and matches closed forms") {
  OffspringLaw b = OffspringLaw::binomial(10, 0.3);
  double sum = 0.0;
  for (int ell = 0; ell <= 10; ++ell) sum += pmf(b, ell);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  // frozen: C(10,3) 0.3^3 0.7^7 = 0.26682793...
  CHECK(pmf(b, 3) == doctest::Approx(0.2668279320).epsilon(1e-9));
  CHECK(pmf(b, 11) == 0.0);

  OffspringLaw p = OffspringLaw::poisson(2.0);
  CHECK(pmf(p, 0) == doctest::Approx(std::exp(-2.0)));
  CHECK(pmf(p, 2) == doctest::Approx(2.0 * std::exp(-2.0)));
  double psum = 0.0;
  for (int ell = 0; ell <= 60; ++ell) psum += pmf(p, ell);
  CHECK(psum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pgf endpoints and series agreement") {
  OffspringLaw b = OffspringLaw::binomial(8, 0.4);
  CHECK(pgf(b, 1.0) == doctest::Approx(1.0));
  CHECK(pgf(b, 0.0) == doctest::Approx(pmf(b, 0)));
  double q = 0.37;
  double series = 0.0;
  for (int ell = 0; ell <= 8; ++ell) series += pmf(b, ell) * std::pow(q, ell);
  CHECK(pgf(b, q) == doctest::Approx(series).epsilon(1e-12));
  CHECK_THROWS_AS(pgf(b, -0.1), std::invalid_argument);
}

TEST_CASE("survival probability frozen values") {
  // fixed point of q = (1 - p + p q)^50 at m p = 1.5: survival 0.5914...
  auto res = survival_probability(OffspringLaw::binomial(50, 1.5 / 50.0));
  CHECK(res.survival == doctest::Approx(0.591449).epsilon(1e-5));
  CHECK(res.residual < 1e-10);
  // (sub)critical: extinct almost surely
  CHECK(survival_probability(OffspringLaw::binomial(20, 0.05)).survival == 0.0);
  CHECK(survival_probability(OffspringLaw::poisson(0.9)).survival == 0.0);
}

TEST_CASE("alpha root: frozen values and PGF cross-check") {
  // alpha = 1 - exp(-(1+eps) alpha), root in (0,1)
  CHECK(alpha_of_epsilon(0.1) == doctest::Approx(0.176134).epsilon(1e-5));
  CHECK(alpha_of_epsilon(0.2) == doctest::Approx(0.313698).epsilon(1e-5));
  CHECK(alpha_of_epsilon(0.3) == doctest::Approx(0.422970).epsilon(1e-5));
  CHECK(alpha_of_epsilon(1.0) ==
        doctest::Approx(0.796812130020).epsilon(1e-10));
  CHECK(alpha_of_epsilon(2.0) == doctest::Approx(0.940480).epsilon(1e-5));
  // alpha(eps) equals Poisson(1+eps) survival
  for (double eps : {0.1, 0.5, 1.0, 2.0}) {
    double a = alpha_of_epsilon(eps);
    double s =
        survival_probability(OffspringLaw::poisson(1.0 + eps), 1e-14).survival;
    CHECK(std::abs(a - s) < 1e-10);
  }
}

TEST_CASE("pi_chi converges to the constant-regime limit") {
  double prev = 1.0;
  for (int n : {100, 1000, 10000, 100000}) {
    PiChi pc = pi_chi(n, 0.2, Regime::kConstant);
    double gap = std::abs(pc.finite_n - pc.asymptotic);
    CHECK(gap < prev);  // strictly decreasing along the grid
    prev = gap;
    CHECK(pc.asymptotic == doctest::Approx(alpha_of_epsilon(0.2)));
  }
  CHECK(pi_chi(1000, 0.05, Regime::kVanishing).asymptotic ==
        doctest::Approx(0.1));
}

TEST_CASE("GW simulation matches the fixed-point survival") {
  OffspringLaw law = OffspringLaw::binomial(50, 1.5 / 50.0);
  double expect = survival_probability(law).survival;
  const int kTrials = 100000;
  int survived = 0;
  for (int t = 0; t < kTrials; ++t) {
    survived += simulate_gw(law, 200, 2000, 777 + t).survived;
  }
  double rate = static_cast<double>(survived) / kTrials;
  double se = binomial_stderr(expect, kTrials);
  CHECK(std::abs(rate - expect) < 3.0 * se);
}

TEST_CASE("GW trace bookkeeping") {
  OffspringLaw dead = OffspringLaw::binomial(5, 0.0);
  GWTrace t = simulate_gw(dead, 100, 100, 1);
  CHECK(!t.survived);
  CHECK(t.total == 1);
  CHECK(t.generation_sizes.size() == 2);  // Z_0 = 1, Z_1 = 0

  OffspringLaw sure = OffspringLaw::binomial(2, 1.0);
  GWTrace s = simulate_gw(sure, 100, 50, 1);
  CHECK(s.survived);
  CHECK(s.total >= 50);
}

TEST_CASE("tree comparison survival") {
  // subcritical n*lambda < 1: extinction
  CHECK(tree_component_survival(10, 0.05) == doctest::Approx(0.0));
  // conditioned >= unconditioned = lambda * conditioned
  double c = tree_component_survival(30, 1.4 / 30.0, 1e-12, true);
  double u = tree_component_survival(30, 1.4 / 30.0, 1e-12, false);
  CHECK(c > 0.0);
  CHECK(u == doctest::Approx((1.4 / 30.0) * c));
  // large n at lambda = (1+eps)/n approaches alpha(eps)
  double big = tree_component_survival(100000, 1.3 / 100000.0);
  CHECK(big == doctest::Approx(alpha_of_epsilon(0.3)).epsilon(1e-3));
}

TEST_CASE("two-sided tail bound") {
  // frozen: c_1 = min(2 ln 2 - 1, 1/2) = ln 4 - 1
  double c = std::log(4.0) - 1.0;
  CHECK(chernoff_bound(1.0, 10.0) ==
        doctest::Approx(2.0 * std::exp(-c * 10.0)).epsilon(1e-12));
  // monotone decreasing in the expectation
  CHECK(chernoff_bound(0.1, 100.0) > chernoff_bound(0.1, 200.0));
  CHECK(chernoff_bound(0.5, 0.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(chernoff_bound(0.0, 1.0), std::invalid_argument);
}
