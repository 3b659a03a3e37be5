#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

// Sum over all translations g of |A cap (g+A)|.  The transitive-action
// identity forces the value |A|^2; the slow route computes the sum
// translation by translation and is its own oracle.
std::uint64_t sidon_sum_slow(const OccupancySet& a);
std::uint64_t sidon_sum(const OccupancySet& a);

// argmax over unit directions of |(A+e_i) \ A| with its value, as a pair
// (coordinate index 1..n, displaced count).  The Aldous bound
// displaced >= |A|(1-|A|/2^n)/n is asserted on every call.
std::pair<int, std::uint64_t> best_direction(const OccupancySet& a);

struct DensityReport {
  double delta = 0.0;
  double threshold = 0.0;  // (1/2)(k/(2(k+1)))^2 n^delta
  std::map<std::uint64_t, std::uint64_t> per_vertex_counts;  // histogram
  std::uint64_t d_delta_size = 0;
};

// Per-vertex counts |S(v,2) cap Gamma_{n,k}| over all v, by accumulating
// the weight-2 translates; fills D_delta.
DensityReport density_report(const OccupancySet& gamma_nk, int k, double delta);

struct PathBundle {
  std::vector<std::vector<Vertex>> paths;  // each <= 4 vertices
  int ball_case = 0;  // 1: |B(A,2)| <= (2/3)2^n, 2: larger (diagnostic)
};

// Greedy maximal collection of pairwise vertex-disjoint paths of at most
// 3 edges from the external boundary of A to the external boundary of B.
// Greedy is maximal by construction: a start that fails never succeeds
// later, since the used set only grows.
PathBundle find_disjoint_short_paths(const OccupancySet& split_a,
                                     const OccupancySet& split_b);

}  // namespace qcube
