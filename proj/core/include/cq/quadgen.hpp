#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cq/geom.hpp"

namespace cq {

// The 28 quadrilateral shape classes under study.
enum class ShapeClass : int {
  General, Cyclic, Tangential, Extangential, Parallelogram, EqualProdOpp,
  EqualProdAdj, Orthodiagonal, Equidiagonal, Pythagorean, Kite, Trapezoid,
  Rhombus, Rectangle, Hjelmslev, IsoscelesTrapezoid, APquad,
  Bicentric, Exbicentric, BicentricTrapezoid, CyclicOrthodiagonal,
  EquidiagonalKite, EquidiagonalOrthodiagonal,
  EquidiagonalOrthodiagonalTrapezoid, Harmonic, OrthodiagonalTrapezoid,
  TangentialTrapezoid, Square,
};

inline constexpr int kShapeCount = 28;

std::string_view shape_name(ShapeClass s);
ShapeClass shape_from_name(std::string_view name);  // throws on unknown
std::vector<ShapeClass> all_shapes();

// A concrete sampled quadrilateral: vertices in counterclockwise order.
struct QuadInstance {
  std::array<Point, 4> v;
  ShapeClass shape = ShapeClass::General;
  std::uint64_t seed = 0;

  double side(int i) const { return distance(v[i], v[(i + 1) % 4]); }
  double diag_ac() const { return distance(v[0], v[2]); }
  double diag_bd() const { return distance(v[1], v[3]); }
  double perimeter() const;
  double diameter() const;  // max pairwise vertex distance
  double angle(int i) const;  // interior angle at vertex i, radians
  double signed_area() const;
  bool convex() const;
};

// Deterministic seeded generator: convex counterclockwise instance whose
// defining condition holds to 1e-9 relative, with diameter in [0.5, 4].
// Throws after 10000 failed attempts (generator bug).
QuadInstance generate(ShapeClass shape, std::uint64_t rng_seed);

// True iff the shape's algebraic/geometric condition holds within tolerance.
bool validate(const QuadInstance& q, ShapeClass shape, double tol = 1e-9);

// Ancestry DAG of the shape taxonomy: an edge (parent, child) means every
// quadrilateral of the child class is also of the parent class.
const std::vector<std::pair<ShapeClass, ShapeClass>>& ancestry_edges();

// Reflexive-transitive predecessors, excluding the shape itself.
const std::set<ShapeClass>& ancestors(ShapeClass shape);
bool is_ancestor(ShapeClass maybe_ancestor, ShapeClass shape);

// {"shape": ..., "vertices": [[x,y] x4], "seed": ...}
std::string quad_to_json(const QuadInstance& q);
QuadInstance quad_from_json(std::string_view json);

// Deterministic generator used across the project.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

// Stable combination of seed material for per-cell random streams.
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace cq
