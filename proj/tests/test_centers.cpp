#include <doctest.h>

#include <cmath>
#include <set>

#include "cq/centers.hpp"
#include "cq/quadgen.hpp"

using namespace cq;

namespace {

// the registry must cover at least this index set
const int kRequired[] = {
    1, 2, 3, 4, 5, 6, 10, 11, 13, 20, 22, 23, 40, 74, 84, 95, 97, 99, 100,
    102, 115, 116, 122, 123, 124, 125, 127, 130, 131, 134, 135, 136, 137,
    139, 140, 146, 147, 148, 149, 150, 151, 152, 153, 175, 216, 233, 244,
    245, 246, 247, 253, 268, 280, 290, 338, 339, 347, 351, 356, 376, 381,
    382, 395, 396, 401, 402, 408, 417, 418, 426, 440, 441, 454, 464, 465,
    466, 477, 486, 512, 546, 547, 548, 549, 550, 577, 616, 617, 620, 631,
    632, 642, 671, 828, 852, 856, 858, 865, 866, 867, 868, 903, 925};

bool proportional(const Bary& b, double x, double y, double z, double tol = 1e-9) {
  const double s = x + y + z;
  return std::abs(b.u - x / s) < tol && std::abs(b.v - y / s) < tol &&
         std::abs(b.w - z / s) < tol;
}

}  // namespace

TEST_CASE("center file parsing") {
  const auto reg = parse_center_file("2 = bary : 1\n5 = bary : a^2*(b^2+c^2)-(b^2-c^2)^2\n");
  CHECK(reg.centers.size() == 2);
  const auto r = eval_center(reg.at(2), 3, 4, 5);
  REQUIRE(r.status == EvalStatus::Finite);
  CHECK(proportional(r.coords, 1, 1, 1));

  CHECK_THROWS_AS(parse_center_file("9 = bary : a*(a\n"), ParseError);
  CHECK_THROWS_AS(parse_center_file("2 = bary : 1\n2 = tril : a\n"), ParseError);
  CHECK_THROWS_AS(parse_center_file("2 = nope : 1\n"), ParseError);
  // comments and blanks are fine
  CHECK_NOTHROW(parse_center_file("# comment\n\n3 = bary : a^2*(b^2+c^2-a^2)\n"));

  try {
    parse_center_file("\n7 = bary : a*(b\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 10);
  }
}

TEST_CASE("registry covers the required index set") {
  const auto& reg = default_registry();
  for (int n : kRequired) CHECK_MESSAGE(reg.contains(n), "missing X" << n);
}

TEST_CASE("evaluation matches known simplifications") {
  const auto& reg = default_registry();

  // centroid
  auto r2 = eval_center(reg.at(2), 1.3, 0.9, 1.1);
  CHECK(proportional(r2.coords, 1, 1, 1));

  // nine-point center of a right triangle (a^2 = b^2 + c^2): (2 : 1 : 1)
  auto r5 = eval_center(reg.at(5), 5, 4, 3);
  CHECK(proportional(r5.coords, 2, 1, 1));
  auto r402 = eval_center(reg.at(402), 5, 4, 3);
  CHECK(proportional(r402.coords, 2, 1, 1));

  // X84 with a^2 + b^2 = c^2 simplifies to (b - c : a - c : c)
  auto r84 = eval_center(reg.at(84), 3, 4, 5);
  CHECK(proportional(r84.coords, 4 - 5, 3 - 5, 5, 1e-8));

  // Morley center of the isosceles right triangle
  const double rt2 = std::sqrt(2.0), rt6 = std::sqrt(6.0);
  auto r356 = eval_center(reg.at(356), rt2, 1, 1);
  CHECK(proportional(r356.coords, rt2 + rt6, (rt6 + 2 * rt2) / 2, (rt6 + 2 * rt2) / 2, 1e-9));
}

TEST_CASE("homogeneity and bisymmetry for every bundled center") {
  const auto& reg = default_registry();
  SplitMix64 rng(23);
  for (int n : reg.indices()) {
    for (int it = 0; it < 3; ++it) {
      double a = rng.range(0.6, 2), b = rng.range(0.6, 2), c = rng.range(0.6, 2);
      if (a + b <= c || b + c <= a || c + a <= b) { --it; continue; }
      const auto r1 = eval_center(reg.at(n), a, b, c);
      const double t = rng.range(0.5, 3);
      const auto r2 = eval_center(reg.at(n), t * a, t * b, t * c);
      REQUIRE(r1.status == r2.status);
      if (r1.status == EvalStatus::Finite) {
        CHECK(std::abs(r1.coords.u - r2.coords.u) < 1e-7);
        CHECK(std::abs(r1.coords.v - r2.coords.v) < 1e-7);
      }
      const auto r3 = eval_center(reg.at(n), a, c, b);
      if (r1.status == EvalStatus::Finite) {
        REQUIRE(r3.status == EvalStatus::Finite);
        CHECK(std::abs(r1.coords.u - r3.coords.u) < 1e-7);
        CHECK(std::abs(r1.coords.v - r3.coords.w) < 1e-7);
        CHECK(std::abs(r1.coords.w - r3.coords.v) < 1e-7);
      }
    }
    // never undefined on the (3,4,5) triangle
    CHECK(eval_center(reg.at(n), 3, 4, 5).status != EvalStatus::Undefined);
    CHECK(eval_center(reg.at(n), 4, 5, 3).status != EvalStatus::Undefined);
  }
}

TEST_CASE("empirical at-infinity set over scalene triangles") {
  const auto& reg = default_registry();
  SplitMix64 rng(29);
  std::set<int> inf_set;
  for (int n : reg.indices()) {
    int count = 0;
    for (int it = 0; it < 10; ++it) {
      double a = rng.range(0.7, 1.0), b = rng.range(1.05, 1.35), c = rng.range(1.5, 1.7);
      if (a + b <= c) { --it; continue; }
      if (eval_center(reg.at(n), a, b, c).status == EvalStatus::AtInfinity) ++count;
    }
    if (count == 10) inf_set.insert(n);
    else CHECK(count == 0);
  }
  CHECK(inf_set == std::set<int>{512});
}

TEST_CASE("isosceles classifier") {
  const auto& reg = default_registry();
  CHECK(classify_isosceles_behavior(reg.at(99)).behavior == IsoBehavior::AtApex);
  CHECK(classify_isosceles_behavior(reg.at(115)).behavior == IsoBehavior::AtBaseMidpoint);
  CHECK(classify_isosceles_behavior(reg.at(351)).behavior == IsoBehavior::AtInfinity);

  const auto c2 = classify_isosceles_behavior(reg.at(2));
  CHECK(c2.behavior == IsoBehavior::ConstantRatio);
  REQUIRE(c2.ratio_rational);
  CHECK(c2.ratio_rational->num == 1);
  CHECK(c2.ratio_rational->den == 3);

  const auto c148 = classify_isosceles_behavior(reg.at(148));
  CHECK(c148.behavior == IsoBehavior::ConstantRatio);
  REQUIRE(c148.ratio_rational);
  CHECK(c148.ratio_rational->num == -1);
  CHECK(c148.ratio_rational->den == 1);

  CHECK(classify_isosceles_behavior(reg.at(5)).behavior == IsoBehavior::NonConstant);
}

TEST_CASE("right-triangle classifier") {
  const auto& reg = default_registry();
  CHECK(classify_right_triangle_ratio(reg.at(3)).behavior ==
        RightBehavior::AtHypotenuseMidpoint);

  const auto c546 = classify_right_triangle_ratio(reg.at(546));
  CHECK(c546.behavior == RightBehavior::ConstantRatio);
  REQUIRE(c546.ratio_rational);
  CHECK(c546.ratio_rational->num == 4);
  CHECK(c546.ratio_rational->den == 1);

  const auto c2 = classify_right_triangle_ratio(reg.at(2));
  REQUIRE(c2.ratio_rational);
  CHECK(c2.ratio_rational->num == 3);
  CHECK(c2.ratio_rational->den == 2);

  const auto c381 = classify_right_triangle_ratio(reg.at(381));
  REQUIRE(c381.ratio_rational);
  CHECK(c381.ratio_rational->num == 3);
  CHECK(c381.ratio_rational->den == 1);

  CHECK(classify_right_triangle_ratio(reg.at(11)).behavior == RightBehavior::NotOnMedian);
}

TEST_CASE("environment override for the center file") {
  // parse_center_file is the mechanism behind CQ_CENTER_FILE; exercise a
  // minimal custom registry directly
  const auto reg = parse_center_file("1 = tril : 1\n6 = bary : a^2\n");
  CHECK(reg.indices() == std::vector<int>{1, 6});
  const auto r = eval_center(reg.at(1), 3, 4, 5);
  CHECK(proportional(r.coords, 3, 4, 5));
}
