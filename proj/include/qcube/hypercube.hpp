#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace qcube {

// A vertex of the binary n-cube: bit i-1 holds coordinate x_i.
using Vertex = std::uint64_t;

// Dense vertex sets are capped at 2^30 bits (128 MiB).
inline constexpr int kDenseCap = 30;

struct CubeGeometry {
  int n;

  explicit CubeGeometry(int dim);

  std::uint64_t vertex_count() const { return std::uint64_t{1} << n; }
  Vertex vertex_mask() const {
    return n == 64 ? ~Vertex{0} : (Vertex{1} << n) - 1;
  }
  bool contains(Vertex v) const { return (v & ~vertex_mask()) == 0; }

  friend bool operator==(const CubeGeometry& a, const CubeGeometry& b) {
    return a.n == b.n;
  }
};

// Flip coordinate i (1-based). Involution; changes Hamming weight by +-1.
Vertex neighbor(const CubeGeometry& g, Vertex v, int i);

int hamming_distance(const CubeGeometry& g, Vertex u, Vertex v);

// The linear order: weight first, ties broken by the fixed lexicographic
// convention (e_1 < e_2 < ... < e_n among unit vectors).
inline bool order_less(Vertex u, Vertex v) {
  int wu = std::popcount(u);
  int wv = std::popcount(v);
  return wu != wv ? wu < wv : u < v;
}

// Dense bit array over all 2^n vertices with a cached cardinality.
class OccupancySet {
 public:
  explicit OccupancySet(const CubeGeometry& g);

  const CubeGeometry& geometry() const { return geom_; }
  int dim() const { return geom_.n; }

  bool test(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(Vertex v) {
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    card_ += !(w & bit);
    w |= bit;
  }
  void erase(Vertex v) {
    std::uint64_t& w = words_[v >> 6];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    card_ -= !!(w & bit);
    w &= ~bit;
  }

  std::uint64_t count() const { return card_; }
  bool empty() const { return card_ == 0; }
  std::uint64_t universe() const { return geom_.vertex_count(); }

  void fill();
  void clear();

  // Visits members in increasing vertex value.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<Vertex>((wi << 6) | b));
        w &= w - 1;
      }
    }
  }
  std::vector<Vertex> to_vector() const;

  OccupancySet& operator|=(const OccupancySet& o);
  OccupancySet& operator&=(const OccupancySet& o);
  OccupancySet& subtract(const OccupancySet& o);

  friend bool operator==(const OccupancySet& a, const OccupancySet& b) {
    return a.geom_ == b.geom_ && a.words_ == b.words_;
  }

  std::uint64_t intersection_count(const OccupancySet& o) const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  CubeGeometry geom_;
  std::vector<std::uint64_t> words_;
  std::uint64_t card_ = 0;

  void recount();
  friend OccupancySet translate(const OccupancySet& a, Vertex g);
};

// The image {a + g | a in A} under translation by g (a cube automorphism).
OccupancySet translate(const OccupancySet& a, Vertex g);

// S(A,j): vertices with some member of A at distance exactly j.  Literal
// semantics: a vertex of A itself belongs to S(A,2) when it has a member
// at distance 2.
OccupancySet sphere(const OccupancySet& a, int j);

// B(A,j): vertices within distance j of A (union of spheres 0..j).
OccupancySet ball(const OccupancySet& a, int j);

// d(A) per the literal definition: vertices with a member at distance 1.
// May intersect A.
OccupancySet boundary_literal(const OccupancySet& a);

// d(A) \ A, the external reading used by the boundary and path machinery.
OccupancySet boundary_external(const OccupancySet& a);

// True iff every vertex of B has a member of A within distance ell.
bool is_dense(const OccupancySet& a, const OccupancySet& b, int ell);

// Coordinate-block partition driving the staged subcomponent growth:
// k blocks of nu_n coordinates, one block of iota_n, and the tail
// z_n+1..n reserved for gamma-processes.
struct CoordinateLayout {
  int n = 0;
  int k = 0;
  double u_n = 0.0;       // n^(-1/3)
  int nu_n = 0;           // floor(u_n*n / (2k(k+1)))
  int iota_n = 0;         // floor(k*u_n*n / (2k+1))
  int z_n = 0;            // k*nu_n + iota_n
  int m = 0;              // n - floor((3/4)*u_n*n), the examination budget
  int gamma_target = 0;   // floor((1/4)*u_n*n)

  // Coordinate index (1-based) of unit e_s^(r); r in 1..k+1.
  int block_unit(int r, int s) const;
  int block_width(int r) const { return r <= k ? nu_n : iota_n; }
  std::vector<int> tail_units() const;
};

// Throws std::domain_error when the layout degenerates (nu_n or iota_n = 0).
CoordinateLayout make_layout(int n, int k);

}  // namespace qcube
