#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cq/radiators.hpp"
#include "cq/relations.hpp"

using namespace cq;

namespace {

bool has_relation(const std::vector<Relation>& rels, RelationKind k) {
  for (const auto& r : rels)
    if (r.kind == k) return true;
  return false;
}

const Relation* find_relation(const std::vector<Relation>& rels, RelationKind k) {
  for (const auto& r : rels)
    if (r.kind == k) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("signed quadrilateral area") {
  const std::array<Point, 4> sq = {Point{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(signed_area_quad(sq) == doctest::Approx(1.0));
  const std::array<Point, 4> rev = {Point{0, 1}, {1, 1}, {1, 0}, {0, 0}};
  CHECK(signed_area_quad(rev) == doctest::Approx(-1.0));
  const std::array<Point, 4> bow = {Point{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(std::abs(signed_area_quad(bow)) < 1e-15);
}

TEST_CASE("recognize_constant") {
  auto r = recognize_constant(4.5000000001, RecognitionMode::RationalOnly);
  CHECK(r.kind == RecognizedConstant::Kind::Rational);
  CHECK(r.p == 9);
  CHECK(r.r == 2);

  auto s = recognize_constant(5.828427124, RecognitionMode::Extended);
  CHECK(s.kind == RecognizedConstant::Kind::QuadIrrational);
  CHECK(s.p == 3);
  CHECK(s.q == 2);
  CHECK(s.d == 2);
  CHECK(s.r == 1);

  auto t = recognize_constant(0.8888888889, RecognitionMode::Extended);
  CHECK(t.kind == RecognizedConstant::Kind::Rational);
  CHECK(t.p == 8);
  CHECK(t.r == 9);

  auto u = recognize_constant(6.0000000002, RecognitionMode::RationalOnly);
  CHECK(u.kind == RecognizedConstant::Kind::Rational);
  CHECK(u.p == 6);
  CHECK(u.r == 1);

  // rational-only rejects denominators of 6 and up
  auto v = recognize_constant(9.0 / 8.0, RecognitionMode::RationalOnly);
  CHECK(v.kind == RecognizedConstant::Kind::Unrecognized);

  auto w = recognize_constant(0.123456789, RecognitionMode::Extended);
  CHECK(w.kind == RecognizedConstant::Kind::Unrecognized);
}

TEST_CASE("recognition round trips") {
  // all reduced p/q with q <= 5, p <= 50
  for (int q = 1; q <= 5; ++q)
    for (int p = 1; p <= 50; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto r = recognize_constant(double(p) / q, RecognitionMode::RationalOnly);
      REQUIRE(r.kind == RecognizedConstant::Kind::Rational);
      CHECK(r.p == p);
      CHECK(r.r == q);
    }
  // quadratic irrationals in table form
  const long long cases[][4] = {{3, 2, 2, 1},   {14, 3, 3, 3},  {14, -5, 3, 1},
                                {27, -10, 2, 4}, {6, 3, 3, 1},  {73, 12, 2, 36},
                                {931, -658, 2, 1}};
  for (const auto& c : cases) {
    const double v = (c[0] + c[1] * std::sqrt(double(c[2]))) / c[3];
    const auto r = recognize_constant(v, RecognitionMode::Extended);
    REQUIRE(r.kind == RecognizedConstant::Kind::QuadIrrational);
    CHECK(std::abs(r.value - v) < 1e-9 * std::abs(v));
  }
}

TEST_CASE("central quadrilateral of the centroid is a parallelogram") {
  const auto& reg = default_registry();
  SplitMix64 rng(31);
  for (int it = 0; it < 50; ++it) {
    const QuadInstance q = generate(ShapeClass::General, 1000 + it);
    auto e = make_radiator(q, RadiatorKind::ArbitraryPoint, rng);
    REQUIRE(e);
    const auto cq_ = central_quadrilateral(q, e->point, reg.at(2));
    REQUIRE(cq_.status == EvalStatus::Finite);
    const auto& f = cq_.quad.pts;
    // opposite sides equal and parallel
    const Point s1 = f[1] - f[0], s2 = f[2] - f[3];
    const Point t1 = f[3] - f[0], t2 = f[2] - f[1];
    CHECK(norm(s1 - s2) < 1e-8 * q.diameter());
    CHECK(norm(t1 - t2) < 1e-8 * q.diameter());
  }
}

TEST_CASE("centers at infinity are skipped") {
  const auto& reg = default_registry();
  // the radial triangles of a rectangle with its diagonal point are
  // isosceles; X512 lies on the line at infinity there
  const QuadInstance rect = generate(ShapeClass::Rectangle, 8);
  const auto e = diagonal_point(rect);
  const auto r = central_quadrilateral(rect, e.point, reg.at(512));
  CHECK(r.status == EvalStatus::AtInfinity);
}

TEST_CASE("detected relations for known configurations") {
  const auto& reg = default_registry();
  SplitMix64 rng(37);

  // general quadrilateral, arbitrary point, centroids: ratio 9/2
  const QuadInstance g = generate(ShapeClass::General, 42);
  auto e = make_radiator(g, RadiatorKind::ArbitraryPoint, rng);
  const auto cg = central_quadrilateral(g, e->point, reg.at(2));
  auto rels = detect_relations(g, cg.quad, RecognitionMode::RationalOnly);
  const auto* ar = find_relation(rels, RelationKind::AreaRatio);
  REQUIRE(ar);
  CHECK(ar->constant.p == 9);
  CHECK(ar->constant.r == 2);

  // square with an interior point: similar
  const QuadInstance sq = generate(ShapeClass::Square, 43);
  auto e2 = make_radiator(sq, RadiatorKind::ArbitraryPoint, rng);
  const auto cs = central_quadrilateral(sq, e2->point, reg.at(2));
  CHECK(has_relation(detect_relations(sq, cs.quad, RecognitionMode::RationalOnly),
                     RelationKind::Similar));

  // rhombus with the diagonal point, X40: same area and perimeter
  const QuadInstance rh = generate(ShapeClass::Rhombus, 44);
  const auto dp = diagonal_point(rh);
  const auto cr = central_quadrilateral(rh, dp.point, reg.at(40));
  const auto rr = detect_relations(rh, cr.quad, RecognitionMode::RationalOnly);
  CHECK(has_relation(rr, RelationKind::SameArea));
  CHECK(has_relation(rr, RelationKind::SamePerimeter));
}

TEST_CASE("congruence detection is reflexive and motion invariant") {
  SplitMix64 rng(41);
  for (int it = 0; it < 20; ++it) {
    const QuadInstance q = generate(ShapeClass::General, 500 + it);
    CentralQuad c;
    c.pts = q.v;
    auto rels = detect_relations(q, c, RecognitionMode::RationalOnly);
    CHECK(has_relation(rels, RelationKind::Congruent));
    CHECK(has_relation(rels, RelationKind::SameArea));

    // apply a rigid motion (rotation + translation) to the copy
    const double th = rng.range(0, 6.28);
    const Point t{rng.range(-2, 2), rng.range(-2, 2)};
    for (auto& p : c.pts)
      p = Point{p.x * std::cos(th) - p.y * std::sin(th) + t.x,
                p.x * std::sin(th) + p.y * std::cos(th) + t.y};
    rels = detect_relations(q, c, RecognitionMode::RationalOnly);
    CHECK(has_relation(rels, RelationKind::Congruent));
  }
}

TEST_CASE("relations invariant under joint rescaling") {
  const auto& reg = default_registry();
  QuadInstance q = generate(ShapeClass::Orthodiagonal, 45);
  const auto dp = diagonal_point(q);
  auto c = central_quadrilateral(q, dp.point, reg.at(546)).quad;
  const auto before = detect_relations(q, c, RecognitionMode::RationalOnly);

  const double s = 3.7;
  for (auto& p : q.v) p = p * s;
  for (auto& p : c.pts) p = p * s;
  const auto after = detect_relations(q, c, RecognitionMode::RationalOnly);
  REQUIRE(before.size() == after.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(before[i].kind == after[i].kind);
    CHECK(before[i].constant.value == doctest::Approx(after[i].constant.value));
  }
}

TEST_CASE("circumcircle relations require concyclic vertex sets") {
  // a quadrilateral compared against itself shares its circumcircle when
  // cyclic, and reports nothing circle-related otherwise
  const QuadInstance cy = generate(ShapeClass::Cyclic, 46);
  CentralQuad same;
  same.pts = cy.v;
  auto rels = detect_relations(cy, same, RecognitionMode::RationalOnly);
  CHECK(has_relation(rels, RelationKind::CongruentCircumcircles));
  CHECK(has_relation(rels, RelationKind::SameCircumcircle));

  const QuadInstance tg = generate(ShapeClass::Tangential, 47);
  CentralQuad same2;
  same2.pts = tg.v;
  rels = detect_relations(tg, same2, RecognitionMode::RationalOnly);
  CHECK(!has_relation(rels, RelationKind::CongruentCircumcircles));
}
