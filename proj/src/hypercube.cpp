#include "qcube/hypercube.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcube {

CubeGeometry::CubeGeometry(int dim) : n(dim) {
  if (dim < 1 || dim > 64) {
    throw std::invalid_argument("cube dimension must be in 1..64");
  }
}

Vertex neighbor(const CubeGeometry& g, Vertex v, int i) {
  if (i < 1 || i > g.n) {
    throw std::out_of_range("coordinate index out of range: " +
                            std::to_string(i));
  }
  return v ^ (Vertex{1} << (i - 1));
}

int hamming_distance(const CubeGeometry& g, Vertex u, Vertex v) {
  (void)g;
  return std::popcount(u ^ v);
}

OccupancySet::OccupancySet(const CubeGeometry& g) : geom_(g) {
  if (g.n > kDenseCap) {
    throw std::invalid_argument("dense OccupancySet capped at n <= " +
                                std::to_string(kDenseCap));
  }
  std::size_t nwords = g.n < 6 ? 1 : (std::size_t{1} << (g.n - 6));
  words_.assign(nwords, 0);
}

void OccupancySet::fill() {
  std::uint64_t all = ~std::uint64_t{0};
  if (geom_.n < 6) all = (std::uint64_t{1} << geom_.vertex_count()) - 1;
  for (auto& w : words_) w = all;
  card_ = geom_.vertex_count();
}

void OccupancySet::clear() {
  for (auto& w : words_) w = 0;
  card_ = 0;
}

std::vector<Vertex> OccupancySet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(card_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void OccupancySet::recount() {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  card_ = c;
}

static void check_same(const OccupancySet& a, const OccupancySet& b) {
  if (!(a.geometry() == b.geometry())) {
    throw std::invalid_argument("geometry mismatch between vertex sets");
  }
}

OccupancySet& OccupancySet::operator|=(const OccupancySet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  recount();
  return *this;
}

OccupancySet& OccupancySet::operator&=(const OccupancySet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  recount();
  return *this;
}

OccupancySet& OccupancySet::subtract(const OccupancySet& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  recount();
  return *this;
}

std::uint64_t OccupancySet::intersection_count(const OccupancySet& o) const {
  check_same(*this, o);
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += std::popcount(words_[i] & o.words_[i]);
  }
  return c;
}

namespace {

// Delta-swap masks: permute_word(x, j) maps bit v to bit v ^ (1<<j).
constexpr std::uint64_t kSwapMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

inline std::uint64_t permute_word(std::uint64_t x, unsigned low) {
  for (int j = 0; j < 6; ++j) {
    if (low & (1u << j)) {
      unsigned s = 1u << j;
      x = ((x & kSwapMask[j]) << s) | ((x >> s) & kSwapMask[j]);
    }
  }
  return x;
}

}  // namespace

OccupancySet translate(const OccupancySet& a, Vertex g) {
  if (!a.geometry().contains(g)) {
    throw std::invalid_argument("translation vector outside the cube");
  }
  OccupancySet out(a.geometry());
  std::size_t hi = static_cast<std::size_t>(g >> 6);
  unsigned low = static_cast<unsigned>(g & 63);
  for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
    out.words_[wi ^ hi] = permute_word(a.words_[wi], low);
  }
  out.card_ = a.card_;
  return out;
}

OccupancySet sphere(const OccupancySet& a, int j) {
  int n = a.dim();
  if (j < 0 || j > n) throw std::out_of_range("sphere radius out of range");
  if (j == 0) return a;
  OccupancySet out(a.geometry());
  // Union of translates of A over all weight-j vectors (Gosper iteration).
  Vertex w = (Vertex{1} << j) - 1;
  Vertex limit = Vertex{1} << n;
  while (w < limit) {
    out |= translate(a, w);
    Vertex c = w & (~w + 1);
    Vertex r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
  return out;
}

OccupancySet ball(const OccupancySet& a, int j) {
  int n = a.dim();
  if (j < 0 || j > n) throw std::out_of_range("ball radius out of range");
  OccupancySet out = a;
  for (int step = 0; step < j; ++step) {
    OccupancySet grown = out;
    for (int i = 0; i < n; ++i) grown |= translate(out, Vertex{1} << i);
    if (grown.count() == out.count()) break;
    out = std::move(grown);
  }
  return out;
}

OccupancySet boundary_literal(const OccupancySet& a) {
  OccupancySet out(a.geometry());
  for (int i = 0; i < a.dim(); ++i) out |= translate(a, Vertex{1} << i);
  return out;
}

OccupancySet boundary_external(const OccupancySet& a) {
  OccupancySet out = boundary_literal(a);
  out.subtract(a);
  return out;
}

bool is_dense(const OccupancySet& a, const OccupancySet& b, int ell) {
  OccupancySet reach = ball(a, ell);
  // every b-vertex must be covered
  OccupancySet uncovered = b;
  uncovered.subtract(reach);
  return uncovered.empty();
}

int CoordinateLayout::block_unit(int r, int s) const {
  if (r < 1 || r > k + 1 || s < 1 || s > block_width(r)) {
    throw std::out_of_range("block unit index out of range");
  }
  return r <= k ? s + (r - 1) * nu_n : s + k * nu_n;
}

std::vector<int> CoordinateLayout::tail_units() const {
  std::vector<int> out;
  out.reserve(n - z_n);
  for (int t = z_n + 1; t <= n; ++t) out.push_back(t);
  return out;
}

CoordinateLayout make_layout(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("make_layout: n, k >= 1");
  CoordinateLayout lay;
  lay.n = n;
  lay.k = k;
  double cbrt_n = std::cbrt(static_cast<double>(n));
  lay.u_n = 1.0 / cbrt_n;
  double unn = cbrt_n * cbrt_n;  // u_n * n = n^(2/3)
  // floors of exact rationals in u_n*n; the epsilon absorbs cbrt rounding
  constexpr double kEps = 1e-9;
  lay.nu_n = static_cast<int>(std::floor(unn / (2.0 * k * (k + 1)) + kEps));
  lay.iota_n = static_cast<int>(std::floor(k * unn / (2.0 * k + 1.0) + kEps));
  lay.z_n = k * lay.nu_n + lay.iota_n;
  lay.m = n - static_cast<int>(std::floor(0.75 * unn + kEps));
  lay.gamma_target = static_cast<int>(std::floor(0.25 * unn + kEps));
  if (lay.nu_n == 0 || lay.iota_n == 0) {
    throw std::domain_error("degenerate layout at n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) +
                            ": nu_n=" + std::to_string(lay.nu_n) +
                            ", iota_n=" + std::to_string(lay.iota_n));
  }
  if (lay.z_n >= n) {
    throw std::domain_error("degenerate layout: no tail coordinates left");
  }
  return lay;
}

}  // namespace qcube
