#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cq/barycentric.hpp"

namespace cq {

// ---------------------------------------------------------------------------
// Center-definition language.
//
// A center is described by the first coordinate of its barycentric or
// trilinear triple, as an expression over the side lengths a, b, c, the
// doubled area S and the angles A, B, C. The remaining coordinates follow
// by the cyclic substitution a->b->c->a (angles likewise).
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ": " + msg),
        line(line_), column(col_) {}
};

// Compiled expression (postfix program over a small value stack).
class CenterExpr {
 public:
  // env indices: 0..6 = a, b, c, S, A, B, C
  double eval(const double env[7]) const;

  struct Op;
  std::vector<Op> code;
};

enum class CoordKind { Barycentric, Trilinear };

struct CenterDef {
  int index = 0;
  CoordKind kind = CoordKind::Barycentric;
  std::shared_ptr<const CenterExpr> expr;
  std::string source;  // expression text as written
};

struct CenterRegistry {
  std::map<int, CenterDef> centers;
  std::set<int> at_infinity;  // empirically at infinity for all triangles

  bool contains(int n) const { return centers.count(n) != 0; }
  const CenterDef& at(int n) const;
  std::vector<int> indices() const;
};

// Parse a single expression (exposed for tests).
CenterExpr parse_center_expr(std::string_view text);

// Parse the line-oriented center file. Throws ParseError with a precise
// location on malformed input or duplicate indices.
CenterRegistry parse_center_file(std::string_view text);

// Bundled registry; honors the CQ_CENTER_FILE environment override.
const CenterRegistry& default_registry();

// ---------------------------------------------------------------------------
// Evaluation.
// ---------------------------------------------------------------------------

enum class EvalStatus { Finite, AtInfinity, Undefined };

struct EvalResult {
  EvalStatus status = EvalStatus::Undefined;
  Bary coords;  // normalized when status == Finite
};

// Evaluate on a triangle with side lengths (a, b, c): the expression at
// (a,b,c), (b,c,a), (c,a,b); trilinear triples are scaled by (a, b, c);
// the result is normalized. S is twice the triangle area (Heron) and the
// angles come from the law of cosines.
EvalResult eval_center(const CenterDef& def, double a, double b, double c);

// ---------------------------------------------------------------------------
// Behavior classifiers (deterministic random triangle samples).
// ---------------------------------------------------------------------------

struct SmallRational {
  long long num = 0;
  long long den = 1;
};

// Recognize x as p/q with 1 <= q <= max_den, |x - p/q| < tol.
std::optional<SmallRational> recognize_small_rational(double x, long long max_den,
                                                      double tol = 1e-7);

enum class IsoBehavior { AtApex, AtBaseMidpoint, AtInfinity, ConstantRatio, NonConstant };

struct IsoClassification {
  IsoBehavior behavior = IsoBehavior::NonConstant;
  double ratio = 0.0;  // XM/AM, meaningful for ConstantRatio
  std::optional<SmallRational> ratio_rational;
};

// Behavior on isosceles triangles (b == c, apex A), ratio XM/AM = u/(u+2v).
IsoClassification classify_isosceles_behavior(const CenterDef& def,
                                              int samples = 8,
                                              std::uint64_t seed = 0x15b3c9d1u);

enum class RightBehavior { AtHypotenuseMidpoint, ConstantRatio, OnMedianNonConstant,
                           NotOnMedian, AtInfinity };

struct RightClassification {
  RightBehavior behavior = RightBehavior::NotOnMedian;
  double ratio = 0.0;  // AM/AX, meaningful for ConstantRatio
  std::optional<SmallRational> ratio_rational;
};

// Behavior on right triangles (right angle at A, a^2 = b^2 + c^2). On the
// median means v == w; at the hypotenuse midpoint additionally u == 0.
RightClassification classify_right_triangle_ratio(const CenterDef& def,
                                                  int samples = 8,
                                                  std::uint64_t seed = 0x51d7a3e5u);

// ---------------------------------------------------------------------------

struct CenterExpr::Op {
  enum class Code : std::uint8_t {
    PushConst, PushVar, Add, Sub, Mul, Div, Neg, Pow, PowInt, Sqrt, Sin, Cos
  };
  Code code;
  double value = 0.0;  // PushConst
  int arg = 0;         // PushVar index / PowInt exponent
};

}  // namespace cq
