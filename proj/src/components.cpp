#include "qcube/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcube {

namespace {

// Rank directory: occupancy rank of each member, built from per-word
// popcount prefixes.  Memory stays proportional to |Gamma| + 2^n bits.
struct RankIndex {
  const OccupancySet* set;
  std::vector<std::uint64_t> prefix;

  explicit RankIndex(const OccupancySet& s) : set(&s) {
    const auto& words = s.words();
    prefix.resize(words.size() + 1, 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      prefix[i + 1] = prefix[i] + std::popcount(words[i]);
    }
  }

  std::uint64_t rank(Vertex v) const {
    std::uint64_t word = set->words()[v >> 6];
    std::uint64_t mask = (std::uint64_t{1} << (v & 63)) - 1;
    return prefix[v >> 6] + std::popcount(word & mask);
  }
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

ComponentLabels label_components(const OccupancySet& gamma) {
  RankIndex ranks(gamma);
  std::size_t total = static_cast<std::size_t>(gamma.count());
  UnionFind uf(total);

  int n = gamma.dim();
  std::uint64_t r = 0;
  gamma.for_each([&](Vertex v) {
    for (int i = 0; i < n; ++i) {
      Vertex u = v ^ (Vertex{1} << i);
      if (u > v && gamma.test(u)) {
        uf.unite(static_cast<std::uint32_t>(r),
                 static_cast<std::uint32_t>(ranks.rank(u)));
      }
    }
    ++r;
  });

  ComponentLabels out;
  out.label_of_rank.resize(total);
  std::vector<std::uint32_t> root_label(total, UINT32_MAX);
  for (std::size_t i = 0; i < total; ++i) {
    std::uint32_t root = uf.find(static_cast<std::uint32_t>(i));
    if (root_label[root] == UINT32_MAX) {
      root_label[root] = static_cast<std::uint32_t>(out.component_size.size());
      out.component_size.push_back(0);
    }
    out.label_of_rank[i] = root_label[root];
    ++out.component_size[root_label[root]];
  }
  return out;
}

ComponentReport analyze(const OccupancySet& gamma, std::uint64_t threshold) {
  ComponentLabels labels = label_components(gamma);
  ComponentReport rep;
  rep.sizes = labels.component_size;
  std::sort(rep.sizes.begin(), rep.sizes.end(), std::greater<>());
  rep.count = rep.sizes.size();
  rep.c1 = rep.sizes.empty() ? 0 : rep.sizes[0];
  rep.c2 = rep.sizes.size() < 2 ? 0 : rep.sizes[1];
  for (std::uint64_t s : rep.sizes) {
    rep.total += s;
    if (s < threshold) rep.threshold_complement += s;
  }
  return rep;
}

OccupancySet component_of(const OccupancySet& gamma, Vertex v) {
  if (!gamma.test(v)) throw std::invalid_argument("vertex not occupied");
  int n = gamma.dim();
  OccupancySet comp(gamma.geometry());
  comp.insert(v);
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex w = stack.back();
    stack.pop_back();
    for (int i = 0; i < n; ++i) {
      Vertex u = w ^ (Vertex{1} << i);
      if (gamma.test(u) && !comp.test(u)) {
        comp.insert(u);
        stack.push_back(u);
      }
    }
  }
  return comp;
}

double largest_fraction(const ComponentReport& report, double denom) {
  if (report.total == 0) throw std::invalid_argument("empty subgraph");
  if (denom <= 0.0) throw std::invalid_argument("nonpositive denominator");
  return static_cast<double>(report.c1) / denom;
}

}  // namespace qcube
