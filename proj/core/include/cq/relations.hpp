#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cq/centers.hpp"
#include "cq/quadgen.hpp"

namespace cq {

// Central quadrilateral FGHI: the chosen center of each radial triangle
// EAB, EBC, ECD, EDA in order. May be non-convex or self-intersecting.
struct CentralQuad {
  std::array<Point, 4> pts;
};

struct CentralQuadResult {
  EvalStatus status = EvalStatus::Undefined;  // AtInfinity => skipped
  CentralQuad quad;
};

// Compute the central quadrilateral of q with respect to radiator E.
// Requires E off all four sidelines.
CentralQuadResult central_quadrilateral(const QuadInstance& q, Point E,
                                        const CenterDef& def);

// Signed area by the triangle sum [PQR] + [RSP]; valid for self-intersecting
// orderings as well.
double signed_area_quad(const std::array<Point, 4>& pts);

enum class RelationKind : int {
  SameArea, AreaRatio, Congruent, Similar, SamePerimeter,
  CongruentCircumcircles, SameCircumcircle,
};
std::string_view relation_name(RelationKind k);
RelationKind relation_from_name(std::string_view name);

enum class RecognitionMode { RationalOnly, Extended };

// A measured constant classified as p/q, as (p + q sqrt(d))/r with
// d in {2, 3}, or left as an unrecognized float.
struct RecognizedConstant {
  enum class Kind { Rational, QuadIrrational, Unrecognized };
  Kind kind = Kind::Unrecognized;
  long long p = 0, q = 0, r = 1;
  int d = 0;
  double value = 0.0;
  double residual = 0.0;

  std::string to_string() const;
  bool same_constant(const RecognizedConstant& o, double tol = 1e-6) const;
};

// Rational-only: p/q with q < 6. Extended: rationals with larger
// denominators plus quadratic irrationals (p + q sqrt(d))/r; smallest r,
// then smallest |q| wins.
RecognizedConstant recognize_constant(double x, RecognitionMode mode);

struct Relation {
  RelationKind kind;
  RecognizedConstant constant;  // meaningful for area relations
};

// Every checked relation between the reference and central quadrilateral.
std::vector<Relation> detect_relations(const QuadInstance& q, const CentralQuad& c,
                                       RecognitionMode mode, double tol = 1e-7);

}  // namespace cq
