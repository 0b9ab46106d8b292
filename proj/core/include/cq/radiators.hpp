#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cq/quadgen.hpp"

namespace cq {

enum class RadiatorKind : int {
  ArbitraryPoint, DiagonalPoint, PonceletPoint, SteinerPoint, Circumcenter,
  Incenter, Anticenter, Orthocenter, VertexCentroid, ThirdDiagonalMidpoint,
};

inline constexpr int kRadiatorCount = 10;

std::string_view radiator_name(RadiatorKind r);
RadiatorKind radiator_from_name(std::string_view name);
std::vector<RadiatorKind> all_radiators();

struct RadiatorResult {
  Point point;
  bool inside = false;      // strictly interior to the quadrilateral
  double residual = 0.0;    // worst construction residual
};

bool point_inside(const QuadInstance& q, Point p);

// Individual constructions. Empty optional = not applicable to this
// instance (e.g. circumcenter of a non-cyclic quadrilateral). Residuals
// above 1e-7 x diameter throw (construction failure).
RadiatorResult diagonal_point(const QuadInstance& q);
RadiatorResult poncelet_point(const QuadInstance& q);
RadiatorResult steiner_point(const QuadInstance& q);
std::optional<RadiatorResult> circumcenter(const QuadInstance& q);
std::optional<RadiatorResult> incenter(const QuadInstance& q);
std::optional<RadiatorResult> anticenter(const QuadInstance& q);
std::optional<RadiatorResult> quad_orthocenter(const QuadInstance& q);
RadiatorResult vertex_centroid(const QuadInstance& q);
std::optional<RadiatorResult> third_diagonal_midpoint(const QuadInstance& q);

// Dispatch; ArbitraryPoint draws a fresh interior point from `rng`.
std::optional<RadiatorResult> make_radiator(const QuadInstance& q, RadiatorKind r,
                                            SplitMix64& rng);

// Proved coincidences between radiators: on any quadrilateral whose class
// descends from `shape`, `kind` lands on the same point as `same_as`.
struct RadiatorCoincidence {
  RadiatorKind kind;
  RadiatorKind same_as;
  ShapeClass shape;
};
const std::vector<RadiatorCoincidence>& radiator_coincidences();

}  // namespace cq
