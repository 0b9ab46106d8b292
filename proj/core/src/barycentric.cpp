#include "cq/barycentric.hpp"

#include <cmath>
#include <stdexcept>

namespace cq {

RefTriangle RefTriangle::from_points(Point A, Point B, Point C) {
  RefTriangle t;
  t.A = A;
  t.B = B;
  t.C = C;
  t.a = distance(B, C);
  t.b = distance(C, A);
  t.c = distance(A, B);
  t.K = triangle_area(A, B, C);
  return t;
}

std::optional<Bary> normalize(const Bary& bc) {
  const double s = bc.u + bc.v + bc.w;
  const double n1 = std::abs(bc.u) + std::abs(bc.v) + std::abs(bc.w);
  if (n1 == 0.0) throw std::invalid_argument("normalize: zero coordinates");
  if (std::abs(s) < 1e-9 * n1) return std::nullopt;
  return Bary{bc.u / s, bc.v / s, bc.w / s};
}

double bary_distance(const RefTriangle& t, const Bary& p, const Bary& q) {
  const double x = p.u - q.u;
  const double y = p.v - q.v;
  const double z = p.w - q.w;
  double r = -t.a * t.a * y * z - t.b * t.b * z * x - t.c * t.c * x * y;
  if (r < 0.0) {
    if (r < -1e-12) throw std::invalid_argument("bary_distance: non-normalized input");
    r = 0.0;
  }
  return std::sqrt(r);
}

double bary_area(const RefTriangle& t, const Bary& p, const Bary& q, const Bary& r) {
  const double det = p.u * (q.v * r.w - q.w * r.v) -
                     p.v * (q.u * r.w - q.w * r.u) +
                     p.w * (q.u * r.v - q.v * r.u);
  return det * t.K;
}

Bary change_of_coordinates(const RefTriangle& t, const Bary& d, const Bary& e,
                           const Bary& f, const Bary& p_inner) {
  if (std::abs(bary_area(t, d, e, f)) < 1e-14 * std::abs(t.K))
    throw std::invalid_argument("change_of_coordinates: degenerate inner triangle");
  Bary out;
  out.u = d.u * p_inner.u + e.u * p_inner.v + f.u * p_inner.w;
  out.v = d.v * p_inner.u + e.v * p_inner.v + f.v * p_inner.w;
  out.w = d.w * p_inner.u + e.w * p_inner.v + f.w * p_inner.w;
  auto n = normalize(out);
  if (!n) throw std::invalid_argument("change_of_coordinates: result at infinity");
  return *n;
}

Point bary_to_cartesian(const RefTriangle& t, const Bary& p) {
  return t.A * p.u + t.B * p.v + t.C * p.w;
}

Bary cartesian_to_bary(const RefTriangle& t, Point p) {
  if (std::abs(t.K) < 1e-300) throw std::invalid_argument("cartesian_to_bary: degenerate triangle");
  Bary b;
  b.u = triangle_area(p, t.B, t.C) / t.K;
  b.v = triangle_area(t.A, p, t.C) / t.K;
  b.w = triangle_area(t.A, t.B, p) / t.K;
  return b;
}

}  // namespace cq
