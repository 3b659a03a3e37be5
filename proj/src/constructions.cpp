#include "qcube/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qcube/components.hpp"

namespace qcube {

namespace {

struct VertexOrder {
  bool operator()(Vertex a, Vertex b) const { return order_less(a, b); }
};

}  // namespace

GammaOutcome gamma_process(const CoordinateLayout& layout, Vertex start,
                           OccupancyOracle& oracle, int target_override) {
  GammaOutcome out;
  out.target = target_override > 0 ? target_override : layout.gamma_target;
  out.component.push_back(start);
  if (static_cast<int>(out.component.size()) >= out.target) {
    out.success = true;
    return out;
  }

  // E: tail directions not yet consumed, kept in coordinate order
  std::vector<int> avail = layout.tail_units();
  std::set<Vertex, VertexOrder> pending{start};
  std::vector<Vertex> cands;

  while (!pending.empty()) {
    Vertex v = *pending.begin();
    pending.erase(pending.begin());

    cands.clear();
    for (int c : avail) cands.push_back(v ^ (Vertex{1} << (c - 1)));
    std::sort(cands.begin(), cands.end(), VertexOrder{});
    std::size_t budget = static_cast<std::size_t>(layout.m);
    if (cands.size() < budget) {
      budget = cands.size();
      out.ran_short = true;
    }

    for (std::size_t i = 0; i < budget; ++i) {
      Vertex w = cands[i];
      ++out.queried;
      if (!oracle.occupied(w)) continue;
      int dir = std::countr_zero(w ^ v) + 1;
      avail.erase(std::find(avail.begin(), avail.end(), dir));
      out.directions_used.push_back(dir);
      out.component.push_back(w);
      pending.insert(w);
      if (static_cast<int>(out.component.size()) >= out.target) {
        out.success = true;
        return out;
      }
    }
  }
  return out;  // pending exhausted before reaching the target
}

GrowthOutcome grow_subcomponent(const CoordinateLayout& layout, Vertex start,
                                OccupancyOracle& oracle) {
  GrowthOutcome g;
  g.stages = layout.k;
  g.c0 = gamma_process(layout, start, oracle);
  g.total_size = g.c0.component.size();
  if (!g.c0.success) return g;

  std::vector<std::vector<Vertex>> prev{g.c0.component};
  bool all_positive = true;
  for (int stage = 1; stage <= layout.k; ++stage) {
    std::vector<std::vector<Vertex>> added;
    for (const auto& base : prev) {
      for (int s = 1; s <= layout.nu_n; ++s) {
        Vertex unit = Vertex{1} << (layout.block_unit(stage, s) - 1);
        // probe the translate in the linear order, stop at the first hit
        std::vector<Vertex> probe;
        probe.reserve(base.size());
        for (Vertex x : base) probe.push_back(x ^ unit);
        std::sort(probe.begin(), probe.end(), VertexOrder{});
        Vertex hit = 0;
        bool found = false;
        for (Vertex w : probe) {
          if (oracle.occupied(w)) {
            hit = w;
            found = true;
            break;
          }
        }
        if (!found) continue;
        GammaOutcome sub = gamma_process(layout, hit, oracle);
        if (sub.success) {
          g.total_size += sub.component.size();
          added.push_back(std::move(sub.component));
        }
      }
    }
    g.stage_counts.push_back(added.size());
    g.added_sets.push_back(added);
    if (added.empty()) {
      all_positive = false;
      break;
    }
    prev = std::move(added);
  }
  g.success = all_positive &&
              static_cast<int>(g.stage_counts.size()) == layout.k;
  return g;
}

double phi_n(int n, int k, double chi, Regime regime) {
  if (chi <= 0.0) throw std::invalid_argument("phi_n: chi > 0");
  CoordinateLayout lay = make_layout(n, k);
  double pi = pi_chi(n, chi, regime).asymptotic;
  return pi * lay.nu_n * (1.0 - std::exp(-(1.0 + chi) * lay.u_n / 4.0));
}

double pi_k(int n, int k, double chi, double rho_k, Regime regime) {
  if (rho_k <= 0.0) throw std::invalid_argument("pi_k: rho_k > 0");
  double pi = pi_chi(n, chi, regime).asymptotic;
  return pi * (1.0 - std::exp(-rho_k * phi_n(n, k, chi, regime)));
}

OccupancySet extract_gamma_nk(const OccupancySet& gamma,
                              std::uint64_t threshold) {
  ComponentLabels labels = label_components(gamma);
  OccupancySet out(gamma.geometry());
  std::uint64_t r = 0;
  gamma.for_each([&](Vertex v) {
    if (labels.component_size[labels.label_of_rank[r]] >= threshold) {
      out.insert(v);
    }
    ++r;
  });
  return out;
}

SuccessRates success_rate(const PercolationParams& params,
                          const CoordinateLayout& layout, int trials,
                          std::uint64_t master_seed) {
  if (trials < 1) throw std::invalid_argument("trials >= 1");
  std::uint64_t gamma_ok = 0;
  std::uint64_t growth_ok = 0;
  for (int t = 0; t < trials; ++t) {
    OccupancyOracle oracle(params,
                           TrialSeed{master_seed, static_cast<std::uint64_t>(t)});
    oracle.force(0, true);
    GrowthOutcome g = grow_subcomponent(layout, 0, oracle);
    gamma_ok += g.c0.success;
    growth_ok += g.success;
  }
  SuccessRates rates;
  rates.gamma = wilson_ci(gamma_ok, trials);
  rates.growth = wilson_ci(growth_ok, trials);
  return rates;
}

}  // namespace qcube
