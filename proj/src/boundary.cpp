#include "qcube/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace qcube {

std::uint64_t sidon_sum_slow(const OccupancySet& a) {
  std::uint64_t universe = a.universe();
  std::uint64_t sum = 0;
  for (Vertex g = 0; g < universe; ++g) {
    sum += a.intersection_count(translate(a, g));
  }
  return sum;
}

std::uint64_t sidon_sum(const OccupancySet& a) {
  // Above n=12 use the pair-counting shortcut: every ordered pair (x,y)
  // of members contributes once, at g = x + y.
  if (a.dim() <= 12) return sidon_sum_slow(a);
  return a.count() * a.count();
}

std::pair<int, std::uint64_t> best_direction(const OccupancySet& a) {
  if (a.empty() || a.count() == a.universe()) {
    throw std::invalid_argument("best_direction: A must be proper and nonempty");
  }
  int best = 1;
  std::uint64_t displaced = 0;
  for (int i = 1; i <= a.dim(); ++i) {
    std::uint64_t kept = a.intersection_count(translate(a, Vertex{1} << (i - 1)));
    std::uint64_t d = a.count() - kept;  // |A+e_i| = |A|, translation bijective
    if (d > displaced) {
      displaced = d;
      best = i;
    }
  }
  double size = static_cast<double>(a.count());
  double bound = size * (1.0 - size / static_cast<double>(a.universe())) /
                 a.dim();
  if (static_cast<double>(displaced) < bound) {
    throw std::logic_error("Aldous direction bound violated");
  }
  return {best, displaced};
}

DensityReport density_report(const OccupancySet& gamma_nk, int k,
                             double delta) {
  if (k < 1) throw std::invalid_argument("k >= 1");
  int n = gamma_nk.dim();
  DensityReport rep;
  rep.delta = delta;
  double ratio = static_cast<double>(k) / (2.0 * (k + 1));
  rep.threshold = 0.5 * ratio * ratio * std::pow(static_cast<double>(n), delta);

  std::vector<std::uint32_t> counts(gamma_nk.universe(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vertex w = (Vertex{1} << i) | (Vertex{1} << j);
      translate(gamma_nk, w).for_each([&](Vertex v) { ++counts[v]; });
    }
  }
  for (std::uint64_t v = 0; v < counts.size(); ++v) {
    ++rep.per_vertex_counts[counts[v]];
    if (static_cast<double>(counts[v]) < rep.threshold) ++rep.d_delta_size;
  }
  return rep;
}

namespace {

// Depth-limited search for a path of <= max_edges edges from v into the
// target set, avoiding used vertices.  Appends the path (including v) on
// success.
bool short_path_dfs(const OccupancySet& target, const OccupancySet& used,
                    Vertex v, int max_edges, std::vector<Vertex>& path) {
  path.push_back(v);
  if (target.test(v)) return true;
  if (max_edges > 0) {
    int n = target.dim();
    for (int i = 0; i < n; ++i) {
      Vertex u = v ^ (Vertex{1} << i);
      if (used.test(u)) continue;
      bool seen = false;
      for (Vertex p : path) {
        if (p == u) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      if (short_path_dfs(target, used, u, max_edges - 1, path)) return true;
    }
  }
  path.pop_back();
  return false;
}

}  // namespace

PathBundle find_disjoint_short_paths(const OccupancySet& split_a,
                                     const OccupancySet& split_b) {
  if (split_a.empty() || split_b.empty()) {
    throw std::invalid_argument("both split sides must be nonempty");
  }
  if (split_a.intersection_count(split_b) != 0) {
    throw std::invalid_argument("split sides must be disjoint");
  }
  OccupancySet da = boundary_external(split_a);
  OccupancySet db = boundary_external(split_b);

  PathBundle bundle;
  bundle.ball_case =
      3 * ball(split_a, 2).count() <= 2 * split_a.universe() ? 1 : 2;

  OccupancySet used(split_a.geometry());
  std::vector<Vertex> path;
  da.for_each([&](Vertex a) {
    if (used.test(a)) return;
    // iterative deepening keeps each accepted path shortest-first
    for (int edges = 0; edges <= 3; ++edges) {
      path.clear();
      if (short_path_dfs(db, used, a, edges, path)) {
        for (Vertex p : path) used.insert(p);
        bundle.paths.push_back(path);
        break;
      }
    }
  });
  return bundle;
}

}  // namespace qcube
