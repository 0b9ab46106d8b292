#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cq/quadgen.hpp"

using namespace cq;

TEST_CASE("square generator") {
  for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
    const QuadInstance q = generate(ShapeClass::Square, seed);
    for (int i = 0; i < 4; ++i) {
      CHECK(q.side(i) == doctest::Approx(q.side(0)));
      CHECK(q.angle(i) == doctest::Approx(std::numbers::pi / 2));
    }
    CHECK(q.diag_ac() == doctest::Approx(q.diag_bd()));
  }
}

TEST_CASE("tangential generator satisfies the Pitot condition") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QuadInstance q = generate(ShapeClass::Tangential, seed);
    const double lhs = q.side(0) + q.side(2), rhs = q.side(1) + q.side(3);
    CHECK(std::abs(lhs - rhs) < 1e-9 * q.perimeter());
  }
}

TEST_CASE("cyclic generator puts all vertices on one circle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const QuadInstance q = generate(ShapeClass::Cyclic, seed);
    const auto c = circle_through(q.v[0], q.v[1], q.v[2]);
    REQUIRE(c);
    CHECK(std::abs(distance(c->center, q.v[3]) - c->radius) < 1e-9 * q.diameter());
  }
}

TEST_CASE("harmonic generator: cyclic with equal products of opposite sides") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QuadInstance q = generate(ShapeClass::Harmonic, seed);
    CHECK(validate(q, ShapeClass::Cyclic));
    const double ac = q.side(0) * q.side(2), bd = q.side(1) * q.side(3);
    CHECK(std::abs(ac - bd) < 1e-9 * (ac + bd));
  }
}

TEST_CASE("validate on explicit instances") {
  QuadInstance sq;
  sq.v = {Point{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(validate(sq, ShapeClass::Orthodiagonal));
  CHECK(validate(sq, ShapeClass::APquad));
  CHECK(validate(sq, ShapeClass::Square));

  // right trapezoid on a 3-4-5 triangle is not isosceles
  QuadInstance rt;
  rt.v = {Point{0, 0}, {4, 0}, {2.5, 3}, {0, 3}};
  CHECK(validate(rt, ShapeClass::Trapezoid));
  CHECK(!validate(rt, ShapeClass::IsoscelesTrapezoid));
}

TEST_CASE("ancestry dag") {
  CHECK(ancestors(ShapeClass::Rectangle).count(ShapeClass::Equidiagonal));
  CHECK(ancestors(ShapeClass::Kite).count(ShapeClass::Orthodiagonal));
  CHECK(ancestors(ShapeClass::General).empty());
  CHECK(is_ancestor(ShapeClass::Rhombus, ShapeClass::Square));
  CHECK(is_ancestor(ShapeClass::Rectangle, ShapeClass::Square));
  CHECK(!is_ancestor(ShapeClass::Orthodiagonal, ShapeClass::Rectangle));

  // acyclic: nothing is its own ancestor
  for (ShapeClass s : all_shapes()) CHECK(!is_ancestor(s, s));
  // every combination class descends from each constituent
  CHECK(is_ancestor(ShapeClass::Cyclic, ShapeClass::Bicentric));
  CHECK(is_ancestor(ShapeClass::Tangential, ShapeClass::Bicentric));
  CHECK(is_ancestor(ShapeClass::Equidiagonal, ShapeClass::EquidiagonalKite));
  CHECK(is_ancestor(ShapeClass::Kite, ShapeClass::EquidiagonalKite));
}

TEST_CASE("generator output is consistent with the dag") {
  // full 100-seed sweep lives in the acceptance suite; spot-check here
  for (ShapeClass s : all_shapes()) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const QuadInstance q = generate(s, seed);
      CHECK(q.convex());
      CHECK(q.signed_area() > 0.0);
      CHECK_MESSAGE(validate(q, s), shape_name(s) << " seed " << seed);
      for (ShapeClass anc : ancestors(s))
        CHECK_MESSAGE(validate(q, anc), shape_name(s) << " misses ancestor "
                                                      << shape_name(anc));
      const double d = q.diameter();
      CHECK(d >= 0.5);
      CHECK(d <= 4.0);
    }
  }
}

TEST_CASE("distinct seeds give distinct instances") {
  for (ShapeClass s : {ShapeClass::General, ShapeClass::Square, ShapeClass::Kite}) {
    std::vector<QuadInstance> qs;
    for (std::uint64_t seed = 0; seed < 40; ++seed) qs.push_back(generate(s, seed));
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        double dmax = 0.0;
        for (int k = 0; k < 4; ++k)
          dmax = std::max(dmax, distance(qs[i].v[k], qs[j].v[k]));
        CHECK(dmax > 1e-6);
      }
  }
}

TEST_CASE("general instances avoid accidental specialization") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const QuadInstance q = generate(ShapeClass::General, seed);
    for (ShapeClass s : all_shapes())
      if (s != ShapeClass::General)
        CHECK_MESSAGE(!validate(q, s, 1e-7), "general validates " << shape_name(s));
  }
}

TEST_CASE("json round trip") {
  const QuadInstance q = generate(ShapeClass::Kite, 5);
  const QuadInstance r = quad_from_json(quad_to_json(q));
  CHECK(r.shape == q.shape);
  CHECK(r.seed == q.seed);
  for (int i = 0; i < 4; ++i) CHECK(distance(q.v[i], r.v[i]) == 0.0);
}
