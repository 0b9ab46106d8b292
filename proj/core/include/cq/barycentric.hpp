#pragma once

#include <optional>

#include "cq/geom.hpp"

namespace cq {

// Reference triangle for barycentric work. Side lengths follow the usual
// convention a = |BC|, b = |CA|, c = |AB|; K is the signed area.
struct RefTriangle {
  Point A, B, C;
  double a = 0.0, b = 0.0, c = 0.0;
  double K = 0.0;

  static RefTriangle from_points(Point A, Point B, Point C);
};

// Homogeneous barycentric masses. `normalized` here means u + v + w == 1.
struct Bary {
  double u = 0.0, v = 0.0, w = 0.0;
};

// Divide by the coordinate sum; empty when the point lies on the line at
// infinity (|u+v+w| < 1e-9 x L1 norm).
std::optional<Bary> normalize(const Bary& bc);

// Distance between two normalized points: sqrt(-a^2 yz - b^2 zx - c^2 xy)
// over the coordinate differences (x, y, z). Radicands slightly below zero
// (>= -1e-12) are clamped; anything worse means the inputs were not
// normalized and throws.
double bary_distance(const RefTriangle& t, const Bary& p, const Bary& q);

// Signed area of the triangle (p, q, r) given by the 3x3 coordinate
// determinant times K; positive when the orientation matches the reference.
double bary_area(const RefTriangle& t, const Bary& p, const Bary& q, const Bary& r);

// Coordinates of a point known in triangle DEF (itself given in ABC
// coordinates) re-expressed in ABC coordinates, normalized. Throws when
// DEF is degenerate.
Bary change_of_coordinates(const RefTriangle& t, const Bary& d, const Bary& e,
                           const Bary& f, const Bary& p_inner);

Point bary_to_cartesian(const RefTriangle& t, const Bary& p);
Bary cartesian_to_bary(const RefTriangle& t, Point p);

}  // namespace cq
