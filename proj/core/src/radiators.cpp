#include "cq/radiators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cq {

namespace {

const std::array<std::string_view, kRadiatorCount> kRadiatorNames = {
    "arbitrary", "diagonal", "poncelet", "steiner", "circumcenter",
    "incenter", "anticenter", "orthocenter", "centroid", "thirdDiagonal"};

constexpr double kResidualScale = 1e-7;

[[noreturn]] void construction_failure(std::string_view what, double residual) {
  throw std::runtime_error("radiator construction failed: " + std::string(what) +
                           " residual " + std::to_string(residual));
}

Point triangle_orthocenter(Point a, Point b, Point c) {
  // intersection of two altitudes
  const Line alt_a = [&] {
    const Point d = c - b;
    Line l;
    const double len = norm(d);
    l.a = d.x / len;
    l.b = d.y / len;
    l.c = -(l.a * a.x + l.b * a.y);
    return l;
  }();
  const Line alt_b = [&] {
    const Point d = a - c;
    Line l;
    const double len = norm(d);
    l.a = d.x / len;
    l.b = d.y / len;
    l.c = -(l.a * b.x + l.b * b.y);
    return l;
  }();
  auto p = line_intersection(alt_a, alt_b);
  if (!p) throw std::runtime_error("triangle_orthocenter: degenerate triangle");
  return *p;
}

Circle nine_point_circle(Point a, Point b, Point c) {
  auto circ = circle_through(midpoint(a, b), midpoint(b, c), midpoint(c, a));
  if (!circ) throw std::runtime_error("nine_point_circle: collinear midpoints");
  return *circ;
}

// common point of a family of circles: intersect the first two, pick the
// candidate closest to the remaining circles, residual = worst distance
RadiatorResult common_point(const std::vector<Circle>& circles, double diameter,
                            std::string_view what) {
  const auto cands = circle_circle_intersection(circles[0], circles[1]);
  if (cands.empty()) construction_failure(what, 1e300);
  Point best;
  double best_res = 1e300;
  for (const Point& p : cands) {
    double res = 0.0;
    for (std::size_t i = 2; i < circles.size(); ++i)
      res = std::max(res, std::abs(distance(p, circles[i].center) - circles[i].radius));
    if (res < best_res) {
      best_res = res;
      best = p;
    }
  }
  if (best_res > kResidualScale * diameter) construction_failure(what, best_res);
  return {best, false, best_res};
}

}  // namespace

std::string_view radiator_name(RadiatorKind r) {
  return kRadiatorNames.at(static_cast<std::size_t>(r));
}

RadiatorKind radiator_from_name(std::string_view name) {
  for (int i = 0; i < kRadiatorCount; ++i)
    if (kRadiatorNames[static_cast<std::size_t>(i)] == name)
      return static_cast<RadiatorKind>(i);
  throw std::invalid_argument("unknown radiator '" + std::string(name) + "'");
}

std::vector<RadiatorKind> all_radiators() {
  std::vector<RadiatorKind> out;
  for (int i = 0; i < kRadiatorCount; ++i) out.push_back(static_cast<RadiatorKind>(i));
  return out;
}

bool point_inside(const QuadInstance& q, Point p) {
  for (int i = 0; i < 4; ++i)
    if (cross(q.v[(i + 1) % 4] - q.v[i], p - q.v[i]) <= 0.0) return false;
  return true;
}

RadiatorResult diagonal_point(const QuadInstance& q) {
  const auto p = line_intersection(Line::through(q.v[0], q.v[2]),
                                   Line::through(q.v[1], q.v[3]));
  if (!p) throw std::runtime_error("diagonal_point: parallel diagonals on convex input");
  return {*p, point_inside(q, *p), 0.0};
}

RadiatorResult poncelet_point(const QuadInstance& q) {
  // component triangles BCD, ACD, ABD, ABC
  const std::vector<Circle> npc = {
      nine_point_circle(q.v[1], q.v[2], q.v[3]),
      nine_point_circle(q.v[0], q.v[2], q.v[3]),
      nine_point_circle(q.v[0], q.v[1], q.v[3]),
      nine_point_circle(q.v[0], q.v[1], q.v[2]),
  };
  auto r = common_point(npc, q.diameter(), "poncelet");
  r.inside = point_inside(q, r.point);
  return r;
}

RadiatorResult steiner_point(const QuadInstance& q) {
  // midray circle at vertex i: through midpoints of segments to the others
  std::vector<Circle> mids;
  for (int i = 0; i < 4; ++i) {
    const Point p = q.v[i];
    auto c = circle_through(midpoint(p, q.v[(i + 1) % 4]),
                            midpoint(p, q.v[(i + 2) % 4]),
                            midpoint(p, q.v[(i + 3) % 4]));
    if (!c) throw std::runtime_error("steiner_point: degenerate midray circle");
    mids.push_back(*c);
  }
  auto r = common_point(mids, q.diameter(), "steiner");
  r.inside = point_inside(q, r.point);
  return r;
}

std::optional<RadiatorResult> circumcenter(const QuadInstance& q) {
  if (!validate(q, ShapeClass::Cyclic)) return std::nullopt;
  auto c = circle_through(q.v[0], q.v[1], q.v[2]);
  if (!c) return std::nullopt;
  const double res = std::abs(distance(c->center, q.v[3]) - c->radius);
  if (res > kResidualScale * q.diameter()) construction_failure("circumcenter", res);
  return RadiatorResult{c->center, point_inside(q, c->center), res};
}

std::optional<RadiatorResult> incenter(const QuadInstance& q) {
  if (!validate(q, ShapeClass::Tangential)) return std::nullopt;
  // intersection of the internal bisectors at A and B
  auto bisector = [&](int i) {
    const Point u = (q.v[(i + 1) % 4] - q.v[i]) / distance(q.v[(i + 1) % 4], q.v[i]);
    const Point w = (q.v[(i + 3) % 4] - q.v[i]) / distance(q.v[(i + 3) % 4], q.v[i]);
    return Line::through(q.v[i], q.v[i] + u + w);
  };
  auto p = line_intersection(bisector(0), bisector(1));
  if (!p) return std::nullopt;
  double dmin = 1e300, dmax = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = std::abs(Line::through(q.v[i], q.v[(i + 1) % 4]).signed_distance(*p));
    dmin = std::min(dmin, d);
    dmax = std::max(dmax, d);
  }
  const double res = dmax - dmin;
  if (res > kResidualScale * q.diameter()) construction_failure("incenter", res);
  return RadiatorResult{*p, point_inside(q, *p), res};
}

std::optional<RadiatorResult> anticenter(const QuadInstance& q) {
  if (!validate(q, ShapeClass::Cyclic)) return std::nullopt;
  // maltitude: from the midpoint of side i perpendicular to side i+2
  auto maltitude = [&](int i) {
    const Point m = midpoint(q.v[i], q.v[(i + 1) % 4]);
    const Point d = q.v[(i + 3) % 4] - q.v[(i + 2) % 4];
    return Line::through(m, m + rot90(d));
  };
  auto p = line_intersection(maltitude(0), maltitude(1));
  if (!p) return std::nullopt;
  double res = 0.0;
  for (int i = 2; i < 4; ++i) res = std::max(res, std::abs(maltitude(i).signed_distance(*p)));
  if (res > kResidualScale * q.diameter()) construction_failure("anticenter", res);
  return RadiatorResult{*p, point_inside(q, *p), res};
}

std::optional<RadiatorResult> quad_orthocenter(const QuadInstance& q) {
  if (!validate(q, ShapeClass::Cyclic)) return std::nullopt;
  // altitude: from vertex i through the orthocenter of the other three
  auto altitude = [&](int i) {
    const Point h = triangle_orthocenter(q.v[(i + 1) % 4], q.v[(i + 2) % 4],
                                         q.v[(i + 3) % 4]);
    return Line::through(q.v[i], h);
  };
  auto p = line_intersection(altitude(0), altitude(1));
  if (!p) return std::nullopt;
  double res = 0.0;
  for (int i = 2; i < 4; ++i) res = std::max(res, std::abs(altitude(i).signed_distance(*p)));
  if (res > kResidualScale * q.diameter()) construction_failure("orthocenter", res);
  return RadiatorResult{*p, point_inside(q, *p), res};
}

RadiatorResult vertex_centroid(const QuadInstance& q) {
  const Point g = (q.v[0] + q.v[1] + q.v[2] + q.v[3]) * 0.25;
  // sanity: the centroid bisects both bimedians
  const Point m1 = midpoint(midpoint(q.v[0], q.v[1]), midpoint(q.v[2], q.v[3]));
  const Point m2 = midpoint(midpoint(q.v[1], q.v[2]), midpoint(q.v[3], q.v[0]));
  const double res = std::max(distance(g, m1), distance(g, m2));
  if (res > kResidualScale * q.diameter()) construction_failure("centroid", res);
  return {g, point_inside(q, g), res};
}

std::optional<RadiatorResult> third_diagonal_midpoint(const QuadInstance& q) {
  const Point ab = q.v[1] - q.v[0], cd = q.v[3] - q.v[2];
  const Point bc = q.v[2] - q.v[1], da = q.v[0] - q.v[3];
  const double tol = 1e-9;
  if (std::abs(cross(ab, cd)) < tol * norm(ab) * norm(cd)) return std::nullopt;
  if (std::abs(cross(bc, da)) < tol * norm(bc) * norm(da)) return std::nullopt;
  const auto p = line_intersection(Line::through(q.v[0], q.v[1]),
                                   Line::through(q.v[2], q.v[3]));
  const auto r = line_intersection(Line::through(q.v[1], q.v[2]),
                                   Line::through(q.v[3], q.v[0]));
  if (!p || !r) return std::nullopt;
  const Point m = midpoint(*p, *r);
  return RadiatorResult{m, point_inside(q, m), 0.0};
}

std::optional<RadiatorResult> make_radiator(const QuadInstance& q, RadiatorKind r,
                                            SplitMix64& rng) {
  switch (r) {
    case RadiatorKind::ArbitraryPoint: {
      // fresh interior point: convex combination of the vertices
      for (int attempt = 0; attempt < 100; ++attempt) {
        double w[4], s = 0.0;
        for (double& x : w) s += (x = 0.05 + rng.unit());
        Point p{0, 0};
        for (int i = 0; i < 4; ++i) p = p + q.v[i] * (w[i] / s);
        if (point_inside(q, p)) return RadiatorResult{p, true, 0.0};
      }
      return std::nullopt;
    }
    case RadiatorKind::DiagonalPoint: return diagonal_point(q);
    case RadiatorKind::PonceletPoint: return poncelet_point(q);
    case RadiatorKind::SteinerPoint: return steiner_point(q);
    case RadiatorKind::Circumcenter: return circumcenter(q);
    case RadiatorKind::Incenter: return incenter(q);
    case RadiatorKind::Anticenter: return anticenter(q);
    case RadiatorKind::Orthocenter: return quad_orthocenter(q);
    case RadiatorKind::VertexCentroid: return vertex_centroid(q);
    case RadiatorKind::ThirdDiagonalMidpoint: return third_diagonal_midpoint(q);
  }
  return std::nullopt;
}

const std::vector<RadiatorCoincidence>& radiator_coincidences() {
  using R = RadiatorKind;
  using S = ShapeClass;
  static const std::vector<RadiatorCoincidence> rules = {
      {R::PonceletPoint, R::DiagonalPoint, S::Parallelogram},
      {R::PonceletPoint, R::DiagonalPoint, S::Orthodiagonal},
      {R::SteinerPoint, R::DiagonalPoint, S::Parallelogram},
      {R::SteinerPoint, R::Circumcenter, S::Cyclic},
      {R::Anticenter, R::PonceletPoint, S::Cyclic},
      {R::Anticenter, R::DiagonalPoint, S::CyclicOrthodiagonal},
      {R::Orthocenter, R::PonceletPoint, S::Cyclic},  // both at (A+B+C+D)/2 - O
      {R::Orthocenter, R::DiagonalPoint, S::Rectangle},
      {R::Circumcenter, R::DiagonalPoint, S::Rectangle},
      {R::Incenter, R::DiagonalPoint, S::Rhombus},
      {R::Incenter, R::VertexCentroid, S::BicentricTrapezoid},
      {R::VertexCentroid, R::DiagonalPoint, S::Parallelogram},
  };
  return rules;
}

}  // namespace cq
