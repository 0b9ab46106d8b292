#include "cq/relations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cq {

CentralQuadResult central_quadrilateral(const QuadInstance& q, Point E,
                                        const CenterDef& def) {
  CentralQuadResult out;
  for (int i = 0; i < 4; ++i) {
    const Point P = q.v[i];
    const Point Q = q.v[(i + 1) % 4];
    // triangle (E, P, Q); side a opposite E
    const double a = distance(P, Q);
    const double b = distance(Q, E);
    const double c = distance(E, P);
    const EvalResult r = eval_center(def, a, b, c);
    if (r.status != EvalStatus::Finite) {
      out.status = r.status;
      return out;
    }
    out.quad.pts[i] = E * r.coords.u + P * r.coords.v + Q * r.coords.w;
  }
  out.status = EvalStatus::Finite;
  return out;
}

double signed_area_quad(const std::array<Point, 4>& pts) {
  return triangle_area(pts[0], pts[1], pts[2]) +
         triangle_area(pts[2], pts[3], pts[0]);
}

namespace {

const std::array<std::string_view, 7> kRelationNames = {
    "sameArea", "areaRatio", "congruent", "similar", "samePerimeter",
    "congruentCircumcircles", "sameCircumcircle"};

long long reduce3(long long& p, long long& q, long long& r) {
  long long g = std::gcd(std::gcd(std::abs(p), std::abs(q)), r);
  if (g == 0) g = 1;
  p /= g;
  q /= g;
  r /= g;
  return g;
}

}  // namespace

std::string_view relation_name(RelationKind k) {
  return kRelationNames.at(static_cast<std::size_t>(k));
}

RelationKind relation_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i)
    if (kRelationNames[i] == name) return static_cast<RelationKind>(i);
  throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
}

std::string RecognizedConstant::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Rational:
      os << p;
      if (r != 1) os << "/" << r;
      break;
    case Kind::QuadIrrational: {
      os << "(" << p;
      if (q >= 0) os << "+" << q;
      else os << "-" << -q;
      os << "*sqrt(" << d << "))";
      if (r != 1) os << "/" << r;
      break;
    }
    case Kind::Unrecognized: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", value);
      os << buf;
      break;
    }
  }
  return os.str();
}

bool RecognizedConstant::same_constant(const RecognizedConstant& o, double tol) const {
  if (kind != o.kind) return false;
  return std::abs(value - o.value) <= tol * std::max({1.0, std::abs(value), std::abs(o.value)});
}

RecognizedConstant recognize_constant(double x, RecognitionMode mode) {
  RecognizedConstant out;
  out.value = x;
  const double tol = 1e-7 * std::max(1.0, std::abs(x));

  // rational search: the main scan stops at denominator 5; extended mode
  // accepts the larger denominators of the supplementary ratios
  const long long max_den = (mode == RecognitionMode::RationalOnly) ? 5 : 60;
  for (long long den = 1; den <= max_den; ++den) {
    const double pd = std::round(x * static_cast<double>(den));
    const double err = std::abs(x - pd / static_cast<double>(den));
    if (err < tol) {
      out.kind = RecognizedConstant::Kind::Rational;
      out.p = static_cast<long long>(pd);
      out.q = 0;
      out.d = 0;
      out.r = den;
      const long long g = std::gcd(std::abs(out.p), out.r);
      if (g > 1) { out.p /= g; out.r /= g; }
      out.residual = err;
      out.value = static_cast<double>(out.p) / static_cast<double>(out.r);
      return out;
    }
  }
  if (mode == RecognitionMode::RationalOnly) return out;

  // quadratic irrationals (p + q sqrt(d)) / r. The q scan reaches 1200, so a
  // 1e-7 window would admit coincidental matches; exactly measured constants
  // are good to ~1e-12, hence the much tighter acceptance here.
  const double irr_tol = 2e-9 * std::max(1.0, std::abs(x));
  static const double roots[2] = {std::sqrt(2.0), std::sqrt(3.0)};
  for (long long r = 1; r <= 36; ++r) {
    const double t = x * static_cast<double>(r);
    for (int di = 0; di < 2; ++di) {
      const double rt = roots[di];
      for (long long qa = 1; qa <= 1200; ++qa) {
        for (int sgn = 0; sgn < 2; ++sgn) {
          const long long qq = sgn ? -qa : qa;
          const double rem = t - static_cast<double>(qq) * rt;
          const double pd = std::round(rem);
          if (std::abs(pd) > 1200) continue;
          const double err = std::abs(rem - pd) / static_cast<double>(r);
          if (err < irr_tol) {
            out.kind = RecognizedConstant::Kind::QuadIrrational;
            out.p = static_cast<long long>(pd);
            out.q = qq;
            out.d = di == 0 ? 2 : 3;
            out.r = r;
            reduce3(out.p, out.q, out.r);
            out.residual = err;
            out.value = (static_cast<double>(out.p) +
                         static_cast<double>(out.q) * rt) / static_cast<double>(out.r);
            return out;
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct QuadMetrics {
  std::array<double, 4> sides;
  double p, q;  // diagonals
  double perimeter;
};

QuadMetrics metrics(const std::array<Point, 4>& v) {
  QuadMetrics m;
  for (int i = 0; i < 4; ++i) m.sides[i] = distance(v[i], v[(i + 1) % 4]);
  m.p = distance(v[0], v[2]);
  m.q = distance(v[1], v[3]);
  m.perimeter = m.sides[0] + m.sides[1] + m.sides[2] + m.sides[3];
  return m;
}

// sextuple of c reordered under one of the 8 dihedral vertex relabelings
std::array<double, 6> sextuple(const std::array<Point, 4>& v, int rot, bool flip) {
  std::array<Point, 4> w;
  for (int i = 0; i < 4; ++i) {
    const int j = flip ? (rot - i + 8) % 4 : (rot + i) % 4;
    w[i] = v[j];
  }
  const QuadMetrics m = metrics(w);
  return {m.sides[0], m.sides[1], m.sides[2], m.sides[3], m.p, m.q};
}

}  // namespace

std::vector<Relation> detect_relations(const QuadInstance& q, const CentralQuad& c,
                                       RecognitionMode mode, double tol) {
  std::vector<Relation> out;
  const double diam = q.diameter();

  const double area_q = std::abs(signed_area_quad(q.v));
  const double area_c = std::abs(signed_area_quad(c.pts));
  if (area_c > 1e-12 * diam * diam) {
    const double ratio = area_q / area_c;
    const RecognizedConstant rc = recognize_constant(ratio, mode);
    if (rc.kind != RecognizedConstant::Kind::Unrecognized) {
      Relation rel;
      rel.constant = rc;
      rel.kind = (rc.kind == RecognizedConstant::Kind::Rational && rc.p == 1 && rc.r == 1)
                     ? RelationKind::SameArea
                     : RelationKind::AreaRatio;
      out.push_back(rel);
    }
  }

  const QuadMetrics mq = metrics(q.v);
  const std::array<double, 6> ref = {mq.sides[0], mq.sides[1], mq.sides[2],
                                     mq.sides[3], mq.p, mq.q};
  bool congruent = false, similar = false;
  for (int rot = 0; rot < 4 && !congruent; ++rot) {
    for (int flip = 0; flip < 2 && !congruent; ++flip) {
      const auto s = sextuple(c.pts, rot, flip != 0);
      bool cong = true;
      for (int i = 0; i < 6; ++i)
        if (std::abs(s[i] - ref[i]) > tol * std::max(s[i], ref[i])) cong = false;
      if (cong) { congruent = true; similar = true; break; }
      // common scale factor?
      if (s[0] < 1e-12 * diam) continue;
      const double k = ref[0] / s[0];
      bool sim = true;
      for (int i = 1; i < 6; ++i)
        if (std::abs(s[i] * k - ref[i]) > tol * std::max(s[i] * k, ref[i])) sim = false;
      if (sim) similar = true;
    }
  }
  if (congruent) out.push_back({RelationKind::Congruent, {}});
  if (similar) out.push_back({RelationKind::Similar, {}});

  const double perim_c = metrics(c.pts).perimeter;
  if (std::abs(mq.perimeter - perim_c) <= tol * std::max(mq.perimeter, perim_c))
    out.push_back({RelationKind::SamePerimeter, {}});

  // circumcircle relations only apply when both vertex sets are concyclic
  auto circum = [&](const std::array<Point, 4>& v) -> std::optional<Circle> {
    auto circ = circle_through(v[0], v[1], v[2]);
    if (!circ) return std::nullopt;
    if (std::abs(distance(circ->center, v[3]) - circ->radius) > tol * diam)
      return std::nullopt;
    return circ;
  };
  const auto cq_ = circum(q.v);
  const auto cc_ = circum(c.pts);
  if (cq_ && cc_) {
    if (std::abs(cq_->radius - cc_->radius) <= tol * std::max(cq_->radius, cc_->radius)) {
      out.push_back({RelationKind::CongruentCircumcircles, {}});
      if (distance(cq_->center, cc_->center) <= tol * diam)
        out.push_back({RelationKind::SameCircumcircle, {}});
    }
  }
  return out;
}

}  // namespace cq
