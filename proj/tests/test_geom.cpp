#include <doctest.h>

#include <cmath>

#include "cq/geom.hpp"
#include "cq/quadgen.hpp"

using namespace cq;

TEST_CASE("line intersection basics") {
  const Line x_axis = Line::through({0, 0}, {1, 0});
  const Line y_axis = Line::through({0, 0}, {0, 1});
  auto p = line_intersection(x_axis, y_axis);
  REQUIRE(p);
  CHECK(p->x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p->y == doctest::Approx(0.0).epsilon(1e-12));

  const Line v0 = Line::through({0, 0}, {0, 1});
  const Line v1 = Line::through({1, 0}, {1, 1});
  CHECK(!line_intersection(v0, v1));

  // diagonals of the unit square
  auto q = line_intersection(Line::through({0, 0}, {1, 1}),
                             Line::through({1, 0}, {0, 1}));
  REQUIRE(q);
  CHECK(q->x == doctest::Approx(0.5));
  CHECK(q->y == doctest::Approx(0.5));
}

TEST_CASE("circle through three points") {
  auto c = circle_through({1, 0}, {0, 1}, {-1, 0});
  REQUIRE(c);
  CHECK(norm(c->center) < 1e-12);
  CHECK(c->radius == doctest::Approx(1.0));

  CHECK(!circle_through({0, 0}, {1, 0}, {0.5, 1e-15}));
}

TEST_CASE("nine-point circle passes through the altitude feet") {
  // triangle (0,0), (4,0), (0,3); its nine-point circle through the side
  // midpoints must also contain the feet of the altitudes, computed directly
  const Point A{0, 0}, B{4, 0}, C{0, 3};
  auto npc = circle_through(midpoint(A, B), midpoint(B, C), midpoint(C, A));
  REQUIRE(npc);
  const Point feet[3] = {
      perpendicular_foot(A, Line::through(B, C)),
      perpendicular_foot(B, Line::through(C, A)),
      perpendicular_foot(C, Line::through(A, B)),
  };
  for (const Point& f : feet)
    CHECK(std::abs(distance(npc->center, f) - npc->radius) < 1e-9 * npc->radius);
}

TEST_CASE("circle-circle intersection") {
  const Circle u{{0, 0}, 1.0};
  auto tangent = circle_circle_intersection(u, {{2, 0}, 1.0});
  REQUIRE(tangent.size() == 1);
  CHECK(tangent[0].x == doctest::Approx(1.0));
  CHECK(std::abs(tangent[0].y) < 1e-9);

  auto lens = circle_circle_intersection(u, {{1, 0}, 1.0});
  REQUIRE(lens.size() == 2);
  for (const Point& p : lens) {
    CHECK(p.x == doctest::Approx(0.5));
    CHECK(std::abs(std::abs(p.y) - std::sqrt(3.0) / 2) < 1e-12);
  }

  CHECK(circle_circle_intersection(u, {{0, 0}, 0.5}).empty());
}

TEST_CASE("shoelace area and the triangle-sum identity") {
  const Point sq[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(shoelace_area(sq) == doctest::Approx(1.0));
  const Point sq_cw[4] = {{0, 1}, {1, 1}, {1, 0}, {0, 0}};
  CHECK(shoelace_area(sq_cw) == doctest::Approx(-1.0));

  // self-intersecting bowtie cancels; matches the triangle-sum oracle exactly
  const Point bow[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const double tri_sum = triangle_area(bow[0], bow[1], bow[2]) +
                         triangle_area(bow[2], bow[3], bow[0]);
  CHECK(shoelace_area(bow) == tri_sum);
  CHECK(std::abs(tri_sum) < 1e-15);
}

TEST_CASE("shoelace equals the triangle sum bitwise for 4-point lists") {
  SplitMix64 rng(7);
  for (int it = 0; it < 200; ++it) {
    Point p[4];
    for (auto& v : p) v = {rng.range(-2, 2), rng.range(-2, 2)};
    const double tri = triangle_area(p[0], p[1], p[2]) + triangle_area(p[2], p[3], p[0]);
    CHECK(shoelace_area(p) == tri);
  }
}

TEST_CASE("perpendicular foot") {
  const Line x_axis = Line::through({0, 0}, {1, 0});
  auto f = perpendicular_foot({0, 1}, x_axis);
  CHECK(norm(f - Point{0, 0}) < 1e-12);

  auto g = perpendicular_foot({0.3, 0}, x_axis);
  CHECK(norm(g - Point{0.3, 0}) < 1e-12);

  // p=(3,4), line x+y=1 -> (0,1), solved by hand from the projection system
  const Line diag = Line::through({1, 0}, {0, 1});
  auto h = perpendicular_foot({3, 4}, diag);
  CHECK(h.x == doctest::Approx(0.0));
  CHECK(h.y == doctest::Approx(1.0));
}

TEST_CASE("sampled circle properties") {
  SplitMix64 rng(99);
  int done = 0;
  while (done < 100) {
    Point a{rng.range(-2, 2), rng.range(-2, 2)};
    Point b{rng.range(-2, 2), rng.range(-2, 2)};
    Point c{rng.range(-2, 2), rng.range(-2, 2)};
    auto circ = circle_through(a, b, c);
    if (!circ) continue;
    ++done;
    for (const Point& p : {a, b, c})
      CHECK(std::abs(distance(circ->center, p) - circ->radius) <
            1e-9 * std::max(1.0, circ->radius));
  }
  // intersection points satisfy both circle equations
  done = 0;
  while (done < 100) {
    const Circle c1{{rng.range(-1, 1), rng.range(-1, 1)}, rng.range(0.5, 2)};
    const Circle c2{{rng.range(-1, 1), rng.range(-1, 1)}, rng.range(0.5, 2)};
    const auto pts = circle_circle_intersection(c1, c2);
    if (pts.size() != 2) continue;
    ++done;
    for (const Point& p : pts) {
      CHECK(std::abs(distance(p, c1.center) - c1.radius) < 1e-9 * c1.radius);
      CHECK(std::abs(distance(p, c2.center) - c2.radius) < 1e-9 * c2.radius);
    }
  }
}
