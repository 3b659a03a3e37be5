#include "qcube/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace qcube {

PercolationParams make_params(int n, double chi, double delta) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  PercolationParams p;
  p.n = n;
  p.chi = chi;
  p.lambda = (1.0 + chi) / n;
  p.delta = delta;
  if (p.lambda < 0.0 || p.lambda > 1.0) {
    throw std::invalid_argument("selection probability (1+chi)/n outside [0,1]");
  }
  return p;
}

OccupancySet sample_induced(const PercolationParams& params,
                            const TrialSeed& seed) {
  CubeGeometry g(params.n);
  OccupancySet out(g);
  if (params.lambda <= 0.0) return out;
  if (params.lambda >= 1.0) {
    out.fill();
    return out;
  }
  std::uint64_t universe = g.vertex_count();
  for (Vertex v = 0; v < universe; ++v) {
    if (vertex_coin(seed, v, 0) < params.lambda) out.insert(v);
  }
  return out;
}

std::pair<OccupancySet, OccupancySet> sample_two_round(int n, double lambda1,
                                                       double lambda2,
                                                       const TrialSeed& seed) {
  if (lambda1 < 0.0 || lambda1 > 1.0 || lambda2 < 0.0 || lambda2 > 1.0) {
    throw std::invalid_argument("round probabilities must lie in [0,1]");
  }
  CubeGeometry g(n);
  OccupancySet round1(g);
  OccupancySet combined(g);
  std::uint64_t universe = g.vertex_count();
  for (Vertex v = 0; v < universe; ++v) {
    bool in1 = vertex_coin(seed, v, 0) < lambda1;
    bool in2 = vertex_coin(seed, v, 1) < lambda2;
    if (in1) round1.insert(v);
    if (in1 || in2) combined.insert(v);
  }
  return {std::move(round1), std::move(combined)};
}

double chi_schedule(int n, double delta) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (delta <= 0.0 || delta >= 1.0 / 3.0) {
    throw std::invalid_argument("delta must lie in (0, 1/3)");
  }
  return std::pow(static_cast<double>(n), -1.0 / 3.0 + delta);
}

}  // namespace qcube
