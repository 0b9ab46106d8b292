#include "cq/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace cq {

Line Line::through(Point p, Point q) {
  const Point d = q - p;
  const double len = norm(d);
  if (len == 0.0) throw std::invalid_argument("Line::through: coincident points");
  Line l;
  l.a = -d.y / len;
  l.b = d.x / len;
  l.c = -(l.a * p.x + l.b * p.y);
  return l;
}

std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) < 1e-12) return std::nullopt;
  return Point{(l1.b * l2.c - l2.b * l1.c) / det,
               (l2.a * l1.c - l1.a * l2.c) / det};
}

std::optional<Circle> circle_through(Point p1, Point p2, Point p3) {
  const double xmin = std::min({p1.x, p2.x, p3.x}), xmax = std::max({p1.x, p2.x, p3.x});
  const double ymin = std::min({p1.y, p2.y, p3.y}), ymax = std::max({p1.y, p2.y, p3.y});
  const double scale = std::max(xmax - xmin, ymax - ymin);
  const double area = triangle_area(p1, p2, p3);
  if (std::abs(area) < 1e-12 * scale * scale) return std::nullopt;

  const double d = 2.0 * (p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) +
                          p3.x * (p1.y - p2.y));
  const double s1 = dot(p1, p1), s2 = dot(p2, p2), s3 = dot(p3, p3);
  Circle c;
  c.center.x = (s1 * (p2.y - p3.y) + s2 * (p3.y - p1.y) + s3 * (p1.y - p2.y)) / d;
  c.center.y = (s1 * (p3.x - p2.x) + s2 * (p1.x - p3.x) + s3 * (p2.x - p1.x)) / d;
  c.radius = distance(c.center, p1);
  return c;
}

std::vector<Point> circle_circle_intersection(const Circle& c1, const Circle& c2) {
  const double d = distance(c1.center, c2.center);
  const double rsum = c1.radius + c2.radius;
  const double rdiff = std::abs(c1.radius - c2.radius);
  const double tol = 1e-9 * std::max(c1.radius, c2.radius);
  if (d > rsum + tol || d < rdiff - tol || d < 1e-300) return {};

  // distance from c1.center to the radical line along the center line
  const double x = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d);
  const double h2 = c1.radius * c1.radius - x * x;
  const Point u = (c2.center - c1.center) / d;
  const Point base = c1.center + u * x;
  if (h2 <= 0.0) return {base};
  const double h = std::sqrt(h2);
  if (2 * h < tol) return {base};
  const Point v = rot90(u) * h;
  return {base + v, base - v};
}

double shoelace_area(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  // four points use the triangle-sum definition [PQR] + [RSP], bit-for-bit
  // the same arithmetic as the quadrilateral area elsewhere
  if (n == 4)
    return triangle_area(pts[0], pts[1], pts[2]) +
           triangle_area(pts[2], pts[3], pts[0]);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s / 2.0;
}

double triangle_area(Point p, Point q, Point r) {
  return cross(q - p, r - p) / 2.0;
}

Point perpendicular_foot(Point p, const Line& l) {
  const double d = l.signed_distance(p);
  return {p.x - d * l.a, p.y - d * l.b};
}

}  // namespace cq
