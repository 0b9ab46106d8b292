#include "cq/quadgen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace cq {

namespace {

constexpr double kPi = std::numbers::pi;

const std::array<std::string_view, kShapeCount> kShapeNames = {
    "general", "cyclic", "tangential", "extangential", "parallelogram",
    "equalProdOpp", "equalProdAdj", "orthodiagonal", "equidiagonal",
    "Pythagorean", "kite", "trapezoid", "rhombus", "rectangle", "Hjelmslev",
    "isoscelesTrapezoid", "APquad", "bicentric", "exbicentric",
    "bicentricTrapezoid", "cyclicOrthodiagonal", "equidiagonalKite",
    "equidiagonalOrthodiagonal", "equidiagonalOrthodiagonalTrapezoid",
    "harmonic", "orthodiagonalTrapezoid", "tangentialTrapezoid", "square"};

}  // namespace

std::string_view shape_name(ShapeClass s) {
  return kShapeNames.at(static_cast<std::size_t>(s));
}

ShapeClass shape_from_name(std::string_view name) {
  for (int i = 0; i < kShapeCount; ++i)
    if (kShapeNames[static_cast<std::size_t>(i)] == name) return static_cast<ShapeClass>(i);
  throw std::invalid_argument("unknown shape class '" + std::string(name) + "'");
}

std::vector<ShapeClass> all_shapes() {
  std::vector<ShapeClass> out;
  for (int i = 0; i < kShapeCount; ++i) out.push_back(static_cast<ShapeClass>(i));
  return out;
}

double QuadInstance::perimeter() const {
  return side(0) + side(1) + side(2) + side(3);
}

double QuadInstance::diameter() const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d = std::max(d, distance(v[i], v[j]));
  return d;
}

double QuadInstance::angle(int i) const {
  const Point p = v[(i + 3) % 4] - v[i];
  const Point q = v[(i + 1) % 4] - v[i];
  return std::acos(std::clamp(dot(p, q) / (norm(p) * norm(q)), -1.0, 1.0));
}

double QuadInstance::signed_area() const {
  return shoelace_area(std::span<const Point>(v.data(), 4));
}

bool QuadInstance::convex() const {
  for (int i = 0; i < 4; ++i) {
    const Point a = v[(i + 1) % 4] - v[i];
    const Point b = v[(i + 2) % 4] - v[(i + 1) % 4];
    if (cross(a, b) <= 0.0) return false;  // counterclockwise strictly convex
  }
  return true;
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  SplitMix64 rng(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
  return rng.next();
}

// ---------------------------------------------------------------- validation

namespace {

bool parallel(Point u, Point v, double tol) {
  return std::abs(cross(u, v)) < tol * norm(u) * norm(v);
}

bool right_angle_at(const QuadInstance& q, int i, double tol) {
  const Point p = q.v[(i + 3) % 4] - q.v[i];
  const Point r = q.v[(i + 1) % 4] - q.v[i];
  return std::abs(dot(p, r)) < tol * norm(p) * norm(r);
}

}  // namespace

bool validate(const QuadInstance& q, ShapeClass shape, double tol) {
  const double a = q.side(0), b = q.side(1), c = q.side(2), d = q.side(3);
  const double per = a + b + c + d;
  switch (shape) {
    case ShapeClass::General:
      return q.convex();
    case ShapeClass::Cyclic: {
      auto circ = circle_through(q.v[0], q.v[1], q.v[2]);
      if (!circ) return false;
      return std::abs(distance(circ->center, q.v[3]) - circ->radius) <
             tol * q.diameter();
    }
    case ShapeClass::Tangential:
      return std::abs(a + c - b - d) < tol * per;
    case ShapeClass::Extangential:
      // an excircle can sit beyond either pair of adjacent sides
      return std::abs(a + b - c - d) < tol * per ||
             std::abs(b + c - d - a) < tol * per;
    case ShapeClass::Parallelogram:
      return std::abs(a - c) < tol * per && std::abs(b - d) < tol * per;
    case ShapeClass::EqualProdOpp:
      return std::abs(a * c - b * d) < tol * (a * c + b * d);
    case ShapeClass::EqualProdAdj:
      return std::abs(a * b - c * d) < tol * (a * b + c * d) ||
             std::abs(b * c - d * a) < tol * (b * c + d * a);
    case ShapeClass::Orthodiagonal:
      return std::abs(a * a + c * c - b * b - d * d) <
             tol * (a * a + b * b + c * c + d * d);
    case ShapeClass::Equidiagonal:
      return std::abs(q.diag_ac() - q.diag_bd()) <
             tol * (q.diag_ac() + q.diag_bd());
    case ShapeClass::Pythagorean: {
      const double s2 = a * a + b * b + c * c + d * d;
      return std::abs(a * a + b * b - c * c - d * d) < tol * s2 ||
             std::abs(b * b + c * c - d * d - a * a) < tol * s2;
    }
    case ShapeClass::Kite:
      return (std::abs(a - b) < tol * per && std::abs(c - d) < tol * per) ||
             (std::abs(b - c) < tol * per && std::abs(d - a) < tol * per);
    case ShapeClass::Trapezoid:
      return parallel(q.v[1] - q.v[0], q.v[2] - q.v[3], tol) ||
             parallel(q.v[2] - q.v[1], q.v[3] - q.v[0], tol);
    case ShapeClass::Rhombus:
      return std::abs(a - b) < tol * per && std::abs(b - c) < tol * per &&
             std::abs(c - d) < tol * per;
    case ShapeClass::Rectangle:
      return right_angle_at(q, 0, tol) && right_angle_at(q, 1, tol) &&
             right_angle_at(q, 2, tol);
    case ShapeClass::Hjelmslev:
      return (right_angle_at(q, 0, tol) && right_angle_at(q, 2, tol)) ||
             (right_angle_at(q, 1, tol) && right_angle_at(q, 3, tol));
    case ShapeClass::IsoscelesTrapezoid: {
      const double tA = q.angle(0), tB = q.angle(1), tC = q.angle(2), tD = q.angle(3);
      return (std::abs(tA - tB) < tol && std::abs(tC - tD) < tol) ||
             (std::abs(tB - tC) < tol && std::abs(tD - tA) < tol);
    }
    case ShapeClass::APquad: {
      // sides in arithmetic progression in either traversal direction
      auto ap = [&](double s0, double s1, double s2, double s3) {
        return std::abs((s1 - s0) - (s2 - s1)) < tol * per &&
               std::abs((s2 - s1) - (s3 - s2)) < tol * per;
      };
      return ap(a, b, c, d) || ap(b, c, d, a) || ap(c, d, a, b) || ap(d, a, b, c) ||
             ap(d, c, b, a) || ap(c, b, a, d) || ap(b, a, d, c) || ap(a, d, c, b);
    }
    case ShapeClass::Bicentric:
      return validate(q, ShapeClass::Cyclic, tol) && validate(q, ShapeClass::Tangential, tol);
    case ShapeClass::Exbicentric:
      return validate(q, ShapeClass::Cyclic, tol) && validate(q, ShapeClass::Extangential, tol);
    case ShapeClass::BicentricTrapezoid:
      return validate(q, ShapeClass::Bicentric, tol) && validate(q, ShapeClass::Trapezoid, tol);
    case ShapeClass::CyclicOrthodiagonal:
      return validate(q, ShapeClass::Cyclic, tol) && validate(q, ShapeClass::Orthodiagonal, tol);
    case ShapeClass::EquidiagonalKite:
      return validate(q, ShapeClass::Equidiagonal, tol) && validate(q, ShapeClass::Kite, tol);
    case ShapeClass::EquidiagonalOrthodiagonal:
      return validate(q, ShapeClass::Equidiagonal, tol) && validate(q, ShapeClass::Orthodiagonal, tol);
    case ShapeClass::EquidiagonalOrthodiagonalTrapezoid:
      return validate(q, ShapeClass::EquidiagonalOrthodiagonal, tol) &&
             validate(q, ShapeClass::Trapezoid, tol);
    case ShapeClass::Harmonic:
      return validate(q, ShapeClass::Cyclic, tol) && validate(q, ShapeClass::EqualProdOpp, tol);
    case ShapeClass::OrthodiagonalTrapezoid:
      return validate(q, ShapeClass::Orthodiagonal, tol) && validate(q, ShapeClass::Trapezoid, tol);
    case ShapeClass::TangentialTrapezoid:
      return validate(q, ShapeClass::Tangential, tol) && validate(q, ShapeClass::Trapezoid, tol);
    case ShapeClass::Square:
      return validate(q, ShapeClass::Rhombus, tol) && validate(q, ShapeClass::Rectangle, tol);
  }
  return false;
}

// ------------------------------------------------------------------ ancestry

const std::vector<std::pair<ShapeClass, ShapeClass>>& ancestry_edges() {
  using S = ShapeClass;
  // (parent, child): the child's defining condition implies the parent's,
  // with sides a, b, c, d in traversal order.
  static const std::vector<std::pair<S, S>> edges = {
      // everything is a convex quadrilateral
      {S::General, S::Cyclic}, {S::General, S::Tangential},
      {S::General, S::Extangential}, {S::General, S::EqualProdOpp},
      {S::General, S::EqualProdAdj}, {S::General, S::Orthodiagonal},
      {S::General, S::Equidiagonal}, {S::General, S::Pythagorean},
      {S::General, S::Trapezoid}, {S::General, S::APquad},
      // parallelogram: a=c, b=d gives a+b=c+d, ab=cd, a^2+b^2=c^2+d^2,
      // and both side pairs parallel
      {S::Extangential, S::Parallelogram}, {S::EqualProdAdj, S::Parallelogram},
      {S::Pythagorean, S::Parallelogram}, {S::Trapezoid, S::Parallelogram},
      // kite: a=b, c=d gives a+c=b+d, ac=bd, perpendicular diagonals, and
      // under the shifted labeling b+c=d+a, bc=da, b^2+c^2=d^2+a^2
      {S::Tangential, S::Kite}, {S::EqualProdOpp, S::Kite},
      {S::Orthodiagonal, S::Kite}, {S::Extangential, S::Kite},
      {S::EqualProdAdj, S::Kite}, {S::Pythagorean, S::Kite},
      // rhombus: equilateral, hence kite and parallelogram; all side
      // differences vanish, so the sides are trivially in progression
      {S::Kite, S::Rhombus}, {S::Parallelogram, S::Rhombus},
      {S::APquad, S::Rhombus},
      // sides s, s+t, s+2t, s+3t: the middle two sum to the outer two
      {S::Extangential, S::APquad},
      // rectangle: equiangular, hence cyclic (A+C=180), a parallelogram,
      // equidiagonal, an isosceles trapezoid (A=B, C=D), has two opposite
      // right angles, and is cyclic with a+b=c+d (exbicentric)
      {S::Cyclic, S::Rectangle}, {S::Parallelogram, S::Rectangle},
      {S::Equidiagonal, S::Rectangle}, {S::IsoscelesTrapezoid, S::Rectangle},
      {S::Hjelmslev, S::Rectangle}, {S::Exbicentric, S::Rectangle},
      // Hjelmslev: two opposite right angles sum to 180, hence cyclic; both
      // right triangles share the hypotenuse, so a^2+b^2 = c^2+d^2
      {S::Cyclic, S::Hjelmslev}, {S::Pythagorean, S::Hjelmslev},
      // isosceles trapezoid: A=B, C=D forces A+C=180 (cyclic), a parallel
      // pair and equal diagonals
      {S::Cyclic, S::IsoscelesTrapezoid}, {S::Trapezoid, S::IsoscelesTrapezoid},
      {S::Equidiagonal, S::IsoscelesTrapezoid},
      // combination classes descend from their constituents
      {S::Cyclic, S::Bicentric}, {S::Tangential, S::Bicentric},
      {S::Cyclic, S::Exbicentric}, {S::Extangential, S::Exbicentric},
      {S::Bicentric, S::BicentricTrapezoid}, {S::Trapezoid, S::BicentricTrapezoid},
      {S::TangentialTrapezoid, S::BicentricTrapezoid},
      // a cyclic trapezoid is isosceles
      {S::IsoscelesTrapezoid, S::BicentricTrapezoid},
      {S::Cyclic, S::CyclicOrthodiagonal}, {S::Orthodiagonal, S::CyclicOrthodiagonal},
      {S::Equidiagonal, S::EquidiagonalKite}, {S::Kite, S::EquidiagonalKite},
      // a kite is orthodiagonal, so an equidiagonal kite is equidiagonal
      // orthodiagonal
      {S::EquidiagonalOrthodiagonal, S::EquidiagonalKite},
      {S::Equidiagonal, S::EquidiagonalOrthodiagonal},
      {S::Orthodiagonal, S::EquidiagonalOrthodiagonal},
      {S::EquidiagonalOrthodiagonal, S::EquidiagonalOrthodiagonalTrapezoid},
      {S::OrthodiagonalTrapezoid, S::EquidiagonalOrthodiagonalTrapezoid},
      // an equidiagonal trapezoid is isosceles, hence also cyclic, which
      // combines with the perpendicular diagonals
      {S::IsoscelesTrapezoid, S::EquidiagonalOrthodiagonalTrapezoid},
      {S::CyclicOrthodiagonal, S::EquidiagonalOrthodiagonalTrapezoid},
      {S::Cyclic, S::Harmonic}, {S::EqualProdOpp, S::Harmonic},
      {S::Orthodiagonal, S::OrthodiagonalTrapezoid},
      {S::Trapezoid, S::OrthodiagonalTrapezoid},
      {S::Tangential, S::TangentialTrapezoid}, {S::Trapezoid, S::TangentialTrapezoid},
      // a rhombus is an orthodiagonal/tangential trapezoid
      {S::OrthodiagonalTrapezoid, S::Rhombus}, {S::TangentialTrapezoid, S::Rhombus},
      // square: equiangular rhombus; every class above applies
      {S::Rhombus, S::Square}, {S::Rectangle, S::Square},
      {S::Bicentric, S::Square}, {S::BicentricTrapezoid, S::Square},
      {S::CyclicOrthodiagonal, S::Square}, {S::EquidiagonalKite, S::Square},
      {S::EquidiagonalOrthodiagonalTrapezoid, S::Square},
      {S::Harmonic, S::Square},
  };
  return edges;
}

const std::set<ShapeClass>& ancestors(ShapeClass shape) {
  static std::map<ShapeClass, std::set<ShapeClass>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;

  std::set<ShapeClass> result;
  std::vector<ShapeClass> frontier = {shape};
  while (!frontier.empty()) {
    ShapeClass s = frontier.back();
    frontier.pop_back();
    for (const auto& [parent, child] : ancestry_edges()) {
      if (child == s && !result.count(parent)) {
        result.insert(parent);
        frontier.push_back(parent);
      }
    }
  }
  return cache.emplace(shape, std::move(result)).first->second;
}

bool is_ancestor(ShapeClass maybe_ancestor, ShapeClass shape) {
  return ancestors(shape).count(maybe_ancestor) != 0;
}

// -----------------------------------------------------------------机 helpers

namespace {

using Builder = std::function<bool(SplitMix64&, QuadInstance&)>;

// secant iteration on a scalar residual along a parametrized family
bool solve_secant(const std::function<double(double)>& f, double t0, double t1,
                  double& root, double tol = 1e-13) {
  double f0 = f(t0), f1 = f(t1);
  for (int it = 0; it < 80; ++it) {
    if (std::abs(f1) < tol) { root = t1; return true; }
    const double den = f1 - f0;
    if (std::abs(den) < 1e-300) return false;
    const double t2 = t1 - f1 * (t1 - t0) / den;
    t0 = t1; f0 = f1;
    t1 = t2; f1 = f(t1);
    if (!std::isfinite(f1)) return false;
  }
  return std::abs(f1) < tol * 10 ? (root = t1, true) : false;
}

// 2D Newton with finite-difference Jacobian, for vertex corrections
bool solve_newton2(const std::function<std::array<double, 2>(Point)>& f, Point& x,
                   double tol = 1e-13) {
  const double h = 1e-7;
  for (int it = 0; it < 60; ++it) {
    const auto r = f(x);
    if (std::abs(r[0]) < tol && std::abs(r[1]) < tol) return true;
    const auto rx = f({x.x + h, x.y});
    const auto ry = f({x.x, x.y + h});
    const double j00 = (rx[0] - r[0]) / h, j01 = (ry[0] - r[0]) / h;
    const double j10 = (rx[1] - r[1]) / h, j11 = (ry[1] - r[1]) / h;
    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-300) return false;
    x.x -= (r[0] * j11 - r[1] * j01) / det;
    x.y -= (r[1] * j00 - r[0] * j10) / det;
  }
  return false;
}

QuadInstance make_quad(Point a, Point b, Point c, Point d, ShapeClass s) {
  QuadInstance q;
  q.v = {a, b, c, d};
  q.shape = s;
  return q;
}

// random convex counterclockwise quadrilateral
bool build_general(SplitMix64& rng, QuadInstance& q) {
  std::array<Point, 4> pts;
  for (auto& p : pts) p = {rng.range(-1, 1), rng.range(-1, 1)};
  Point cen{0, 0};
  for (auto& p : pts) cen = cen + p * 0.25;
  std::sort(pts.begin(), pts.end(), [&](Point p, Point r) {
    return std::atan2(p.y - cen.y, p.x - cen.x) < std::atan2(r.y - cen.y, r.x - cen.x);
  });
  q.v = pts;
  return q.convex();
}

// four points on the unit circle; every arc below pi keeps the circumcenter
// strictly interior (the circumcenter-radiator relations assume this)
bool build_cyclic_angles(SplitMix64& rng, std::array<double, 4>& t) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& x : t) x = rng.range(0, 2 * kPi);
    std::sort(t.begin(), t.end());
    const std::array<double, 4> arcs = {t[1] - t[0], t[2] - t[1], t[3] - t[2],
                                        2 * kPi - (t[3] - t[0])};
    const auto [lo, hi] = std::minmax_element(arcs.begin(), arcs.end());
    if (*lo > 0.35 && *hi < kPi - 0.1) return true;
  }
  return false;
}

bool build_cyclic(SplitMix64& rng, QuadInstance& q) {
  std::array<double, 4> t;
  if (!build_cyclic_angles(rng, t)) return false;
  for (int i = 0; i < 4; ++i) q.v[i] = {std::cos(t[i]), std::sin(t[i])};
  return true;
}

// vertices as intersections of four tangent lines of the unit incircle
bool tangential_from_angles(const std::array<double, 4>& ts, QuadInstance& q) {
  for (int i = 0; i < 4; ++i) {
    const double a1 = ts[i], a2 = ts[(i + 1) % 4];
    const double den = std::sin(a2 - a1);
    if (std::abs(den) < 1e-9) return false;
    q.v[i] = {(std::sin(a2) - std::sin(a1)) / den,
              (std::cos(a1) - std::cos(a2)) / den};
  }
  return q.convex();
}

bool build_tangential(SplitMix64& rng, QuadInstance& q) {
  std::array<double, 4> ts;
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& x : ts) x = rng.range(0, 2 * kPi);
    std::sort(ts.begin(), ts.end());
    const std::array<double, 4> gaps = {ts[1] - ts[0], ts[2] - ts[1],
                                        ts[3] - ts[2], 2 * kPi - (ts[3] - ts[0])};
    const auto [lo, hi] = std::minmax_element(gaps.begin(), gaps.end());
    if (*lo > 0.5 && *hi < kPi - 0.25) return tangential_from_angles(ts, q);
  }
  return false;
}

bool build_orthodiagonal(SplitMix64& rng, QuadInstance& q, bool equidiagonal) {
  const double p1 = rng.range(0.4, 1.6), p2 = rng.range(0.4, 1.6);
  const double q1 = rng.range(0.4, 1.6);
  const double q2 = equidiagonal ? p1 + p2 - q1 : rng.range(0.4, 1.6);
  if (q2 < 0.25) return false;
  q = make_quad({p1, 0}, {0, q1}, {-p2, 0}, {0, -q2}, q.shape);
  return true;
}

bool build_trapezoid(SplitMix64& rng, QuadInstance& q) {
  const double w = rng.range(1.0, 2.0);
  const double h = rng.range(0.5, 1.4);
  const double d1 = rng.range(-0.5, 0.5);
  const double c1 = d1 + rng.range(0.55, 1.8);  // top side length != w
  q = make_quad({0, 0}, {w, 0}, {c1, h}, {d1, h}, q.shape);
  return q.convex();
}

// secant correction moving vertex D along a ray; residual over side lengths
bool correct_vertex(QuadInstance& q, int vi, Point dir,
                    const std::function<double(const QuadInstance&)>& resid) {
  const Point base = q.v[vi];
  auto f = [&](double t) {
    QuadInstance tmp = q;
    tmp.v[vi] = base + dir * t;
    return resid(tmp);
  };
  double root = 0.0;
  if (!solve_secant(f, 0.0, 0.05, root)) return false;
  q.v[vi] = base + dir * root;
  return q.convex();
}

}  // namespace

QuadInstance generate(ShapeClass shape, std::uint64_t rng_seed) {
  SplitMix64 rng(hash_combine(0x5eedf00dULL, rng_seed) ^ (static_cast<std::uint64_t>(shape) << 32));

  for (int attempt = 0; attempt < 10000; ++attempt) {
    QuadInstance q;
    q.shape = shape;
    q.seed = rng_seed;
    bool ok = false;

    switch (shape) {
      case ShapeClass::General:
        ok = build_general(rng, q);
        break;
      case ShapeClass::Cyclic:
        ok = build_cyclic(rng, q);
        break;
      case ShapeClass::Tangential:
        ok = build_tangential(rng, q);
        break;
      case ShapeClass::Extangential:
        ok = build_general(rng, q) &&
             correct_vertex(q, 3, q.v[3] - q.v[1], [](const QuadInstance& t) {
               return t.side(0) + t.side(1) - t.side(2) - t.side(3);
             });
        break;
      case ShapeClass::Parallelogram: {
        const Point b{rng.range(0.8, 1.8), 0};
        const Point d{rng.range(-0.5, 0.7), rng.range(0.6, 1.5)};
        q = make_quad({0, 0}, b, b + d, d, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::EqualProdOpp:
        ok = build_general(rng, q) &&
             correct_vertex(q, 3, q.v[3] - q.v[1], [](const QuadInstance& t) {
               return t.side(0) * t.side(2) - t.side(1) * t.side(3);
             });
        break;
      case ShapeClass::EqualProdAdj:
        ok = build_general(rng, q) &&
             correct_vertex(q, 3, q.v[3] - q.v[1], [](const QuadInstance& t) {
               return t.side(0) * t.side(1) - t.side(2) * t.side(3);
             });
        break;
      case ShapeClass::Orthodiagonal:
        ok = build_orthodiagonal(rng, q, false);
        break;
      case ShapeClass::Equidiagonal: {
        if (!build_general(rng, q)) break;
        // scale diagonal BD about its midpoint to match |AC|
        const Point m = midpoint(q.v[1], q.v[3]);
        const double s = q.diag_ac() / q.diag_bd();
        q.v[1] = m + (q.v[1] - m) * s;
        q.v[3] = m + (q.v[3] - m) * s;
        ok = q.convex();
        break;
      }
      case ShapeClass::Pythagorean:
        ok = build_general(rng, q) &&
             correct_vertex(q, 2, q.v[2] - q.v[0], [](const QuadInstance& t) {
               const double a = t.side(0), b = t.side(1), c = t.side(2), d = t.side(3);
               return a * a + b * b - c * c - d * d;
             });
        break;
      case ShapeClass::Kite: {
        const double x = rng.range(-0.6, 0.6);
        const double y = rng.range(0.55, 1.8);
        q = make_quad({x, y}, {-1, 0}, {x, -y}, {1, 0}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::Trapezoid:
        ok = build_trapezoid(rng, q);
        break;
      case ShapeClass::Rhombus: {
        const double p = rng.range(0.5, 1.6), r = rng.range(0.5, 1.6);
        q = make_quad({p, 0}, {0, r}, {-p, 0}, {0, -r}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::Rectangle: {
        const double w = rng.range(0.5, 1.6), h = rng.range(0.5, 1.6);
        q = make_quad({w, h}, {-w, h}, {-w, -h}, {w, -h}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::Hjelmslev: {
        // right angles at B and D: both on the circle with diameter AC
        const double tb = rng.range(kPi + 0.35, 2 * kPi - 0.35);
        const double td = rng.range(0.35, kPi - 0.35);
        q = make_quad({-1, 0}, {std::cos(tb), std::sin(tb)}, {1, 0},
                      {std::cos(td), std::sin(td)}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::IsoscelesTrapezoid: {
        const double t1 = rng.range(0.2, kPi / 2 - 0.12);
        const double t2 = rng.range(kPi / 2 + 0.12, kPi - 0.2);
        if (t2 - t1 < 0.3) break;
        q = make_quad({std::cos(-t2), std::sin(-t2)}, {std::cos(-t1), std::sin(-t1)},
                      {std::cos(t1), std::sin(t1)}, {std::cos(t2), std::sin(t2)}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::APquad: {
        if (!build_general(rng, q)) break;
        Point d = q.v[3];
        auto resid = [&](Point p) -> std::array<double, 2> {
          QuadInstance t = q;
          t.v[3] = p;
          const double s0 = t.side(0), s1 = t.side(1), s2 = t.side(2), s3 = t.side(3);
          return {s0 + s2 - 2 * s1, s1 + s3 - 2 * s2};
        };
        ok = solve_newton2(resid, d);
        if (ok) {
          q.v[3] = d;
          ok = q.convex();
        }
        break;
      }
      case ShapeClass::Bicentric: {
        std::array<double, 4> t;
        if (!build_cyclic_angles(rng, t)) break;
        auto f = [&](double dt) {
          std::array<double, 4> tt = t;
          tt[1] += dt;
          QuadInstance tmp = q;
          for (int i = 0; i < 4; ++i) tmp.v[i] = {std::cos(tt[i]), std::sin(tt[i])};
          return tmp.side(0) + tmp.side(2) - tmp.side(1) - tmp.side(3);
        };
        double root = 0.0;
        if (!solve_secant(f, 0.0, 0.05, root)) break;
        t[1] += root;
        std::sort(t.begin(), t.end());
        for (int i = 0; i < 4; ++i) q.v[i] = {std::cos(t[i]), std::sin(t[i])};
        ok = q.convex() && validate(q, ShapeClass::Tangential, 1e-10);
        break;
      }
      case ShapeClass::Exbicentric: {
        std::array<double, 4> t;
        if (!build_cyclic_angles(rng, t)) break;
        auto f = [&](double dt) {
          std::array<double, 4> tt = t;
          tt[1] += dt;
          QuadInstance tmp = q;
          for (int i = 0; i < 4; ++i) tmp.v[i] = {std::cos(tt[i]), std::sin(tt[i])};
          return tmp.side(0) + tmp.side(1) - tmp.side(2) - tmp.side(3);
        };
        double root = 0.0;
        if (!solve_secant(f, 0.0, 0.05, root)) break;
        t[1] += root;
        std::sort(t.begin(), t.end());
        for (int i = 0; i < 4; ++i) q.v[i] = {std::cos(t[i]), std::sin(t[i])};
        ok = q.convex() && validate(q, ShapeClass::Extangential, 1e-10);
        break;
      }
      case ShapeClass::BicentricTrapezoid: {
        // incircle tangent to y=+-1 and two slants mirrored across the y-axis
        const double th = rng.range(0.2, 1.3);
        const double ct = std::cos(th), st = std::sin(th);
        const double xb = (1 + st) / ct, xt = (1 - st) / ct;
        q = make_quad({-xb, -1}, {xb, -1}, {xt, 1}, {-xt, 1}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::CyclicOrthodiagonal: {
        const Point e{rng.range(-0.45, 0.45), rng.range(-0.45, 0.45)};
        const double th = rng.range(0, kPi);
        const Point u{std::cos(th), std::sin(th)}, w = rot90(u);
        auto chord = [&](Point dir, double& lo, double& hi) {
          const double b2 = dot(e, dir);
          const double disc = b2 * b2 - (dot(e, e) - 1.0);
          lo = -b2 - std::sqrt(disc);
          hi = -b2 + std::sqrt(disc);
        };
        double lo1, hi1, lo2, hi2;
        chord(u, lo1, hi1);
        chord(w, lo2, hi2);
        q = make_quad(e + u * hi1, e + w * hi2, e + u * lo1, e + w * lo2, shape);
        ok = q.convex() && validate(q, ShapeClass::Cyclic, 1e-10);
        break;
      }
      case ShapeClass::EquidiagonalKite: {
        const double x = rng.range(-0.8, 0.8);
        q = make_quad({x, 1}, {-1, 0}, {x, -1}, {1, 0}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::EquidiagonalOrthodiagonal:
        ok = build_orthodiagonal(rng, q, true);
        break;
      case ShapeClass::EquidiagonalOrthodiagonalTrapezoid: {
        const double h = rng.range(0.6, 1.4);
        const double w = rng.range(h * 1.02, 2 * h * 0.98);
        q = make_quad({0, 0}, {w, 0}, {h, h}, {w - h, h}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::Harmonic: {
        std::array<double, 4> t;
        if (!build_cyclic_angles(rng, t)) break;
        auto f = [&](double dt) {
          std::array<double, 4> tt = t;
          tt[1] += dt;
          QuadInstance tmp = q;
          for (int i = 0; i < 4; ++i) tmp.v[i] = {std::cos(tt[i]), std::sin(tt[i])};
          return tmp.side(0) * tmp.side(2) - tmp.side(1) * tmp.side(3);
        };
        double root = 0.0;
        if (!solve_secant(f, 0.0, 0.05, root)) break;
        t[1] += root;
        std::sort(t.begin(), t.end());
        for (int i = 0; i < 4; ++i) q.v[i] = {std::cos(t[i]), std::sin(t[i])};
        ok = q.convex() && validate(q, ShapeClass::EqualProdOpp, 1e-10);
        break;
      }
      case ShapeClass::OrthodiagonalTrapezoid: {
        // AC = (c1, h), BD = (d1 - w, h); perpendicular iff d1 = w - h^2/c1
        const double w = rng.range(1.0, 2.0);
        const double h = rng.range(0.5, 1.3);
        const double c1 = rng.range(0.8, 1.8);
        const double d1 = w - h * h / c1;
        q = make_quad({0, 0}, {w, 0}, {c1, h}, {d1, h}, shape);
        ok = q.convex();
        break;
      }
      case ShapeClass::TangentialTrapezoid: {
        const double phi = rng.range(-0.75, 0.75);
        const double psi = rng.range(kPi - 0.75, kPi + 0.75);
        const std::array<double, 4> ts = {-kPi / 2, phi, kPi / 2, psi};
        ok = tangential_from_angles(ts, q);
        break;
      }
      case ShapeClass::Square: {
        const double s = rng.range(0.5, 1.25);
        q = make_quad({s, s}, {-s, s}, {-s, -s}, {s, -s}, shape);
        ok = true;
        break;
      }
    }

    if (!ok || !q.convex()) continue;

    // normalize scale so diameters stay in a friendly range
    const double diam = q.diameter();
    const double target = 1.2 + 0.8 * rng.unit();
    const double sc = target / diam;
    for (auto& p : q.v) p = p * sc;

    // anti-degeneracy: no tiny angles, no extreme side ratios
    double amin = 2 * kPi, smin = 1e300, smax = 0.0;
    for (int i = 0; i < 4; ++i) {
      amin = std::min(amin, q.angle(i));
      smin = std::min(smin, q.side(i));
      smax = std::max(smax, q.side(i));
    }
    if (amin < kPi / 18.0 || smax / smin > 10.0) continue;

    if (!validate(q, shape, 1e-9)) continue;

    // avoid accidental specialization: the instance must not satisfy any
    // shape condition outside the ancestor closure
    const auto& anc = ancestors(shape);
    bool special = false;
    for (ShapeClass s : all_shapes()) {
      if (s == shape || anc.count(s)) continue;
      if (validate(q, s, 1e-7)) { special = true; break; }
    }
    if (special) continue;

    return q;
  }
  throw std::runtime_error("generate: rejection sampling failed for shape '" +
                           std::string(shape_name(shape)) + "'");
}

// --------------------------------------------------------------------- JSON

std::string quad_to_json(const QuadInstance& q) {
  nlohmann::json j;
  j["shape"] = std::string(shape_name(q.shape));
  j["vertices"] = nlohmann::json::array();
  for (const auto& p : q.v) j["vertices"].push_back({p.x, p.y});
  j["seed"] = q.seed;
  return j.dump();
}

QuadInstance quad_from_json(std::string_view json) {
  const auto j = nlohmann::json::parse(json);
  QuadInstance q;
  q.shape = shape_from_name(j.at("shape").get<std::string>());
  const auto& vs = j.at("vertices");
  if (vs.size() != 4) throw std::invalid_argument("quad_from_json: need 4 vertices");
  for (int i = 0; i < 4; ++i) q.v[i] = {vs[i][0].get<double>(), vs[i][1].get<double>()};
  q.seed = j.value("seed", 0ull);
  return q;
}

}  // namespace cq
