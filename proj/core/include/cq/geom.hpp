#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace cq {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_) : x(x_), y(y_) {}

  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator*(double t) const { return {x * t, y * t}; }
  Point operator/(double t) const { return {x / t, y / t}; }
};

inline Point operator*(double t, Point p) { return p * t; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
inline Point rot90(Point a) { return {-a.y, a.x}; }

// Line as A*x + B*y + C = 0 with A^2 + B^2 = 1.
struct Line {
  double a = 0.0, b = 0.0, c = 0.0;

  static Line through(Point p, Point q);
  double signed_distance(Point p) const { return a * p.x + b * p.y + c; }
};

struct Circle {
  Point center;
  double radius = 0.0;
};

// Intersection of two normalized lines; empty when parallel
// (|cross of normals| < 1e-12).
std::optional<Point> line_intersection(const Line& l1, const Line& l2);

// Circle through three points; empty when they are collinear
// (triangle area below 1e-12 x bounding-box scale squared).
std::optional<Circle> circle_through(Point p1, Point p2, Point p3);

// Zero, one or two intersection points. Tangency collapses the two analytic
// roots to one point when they are closer than 1e-9 x radius.
std::vector<Point> circle_circle_intersection(const Circle& c1, const Circle& c2);

// Signed area of a polygon, positive for counterclockwise orientation.
// For four points this equals the triangle sum [PQR] + [RSP].
double shoelace_area(std::span<const Point> pts);

double triangle_area(Point p, Point q, Point r);

// Orthogonal projection of p onto l (l normalized).
Point perpendicular_foot(Point p, const Line& l);

}  // namespace cq
