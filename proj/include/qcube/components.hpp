#pragma once

#include <cstdint>
#include <vector>

#include "qcube/hypercube.hpp"

namespace qcube {

struct ComponentReport {
  std::vector<std::uint64_t> sizes;  // sorted descending
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  // occupied vertices in components of size < threshold (|U_n|)
  std::uint64_t threshold_complement = 0;
};

// Exact component decomposition under XOR-adjacency (union-find with
// union-by-size and path compression over occupied vertices).
ComponentReport analyze(const OccupancySet& gamma, std::uint64_t threshold = 1);

// Per-occupied-vertex labels, indexed by occupancy rank (position among
// members in vertex order).  component_size[label] gives the size.
struct ComponentLabels {
  std::vector<std::uint32_t> label_of_rank;
  std::vector<std::uint64_t> component_size;
};
ComponentLabels label_components(const OccupancySet& gamma);

// The maximal connected occupied set containing v.  Throws if v unoccupied.
OccupancySet component_of(const OccupancySet& gamma, Vertex v);

// c1 / denom; throws on empty report or nonpositive denominator.
double largest_fraction(const ComponentReport& report, double denom);

}  // namespace qcube
