#include "cq/centers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

namespace cq {

namespace detail {
const char* bundled_center_text();  // centers_data.cpp (generated)

// splitmix64, the project-wide deterministic generator
inline std::uint64_t mix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
inline double mix_unit(std::uint64_t& s) {
  return static_cast<double>(mix64(s) >> 11) * 0x1.0p-53;
}
}  // namespace detail

// ---------------------------------------------------------------- evaluation

double CenterExpr::eval(const double env[7]) const {
  double stack[64];
  int top = -1;
  for (const Op& op : code) {
    using C = Op::Code;
    switch (op.code) {
      case C::PushConst: stack[++top] = op.value; break;
      case C::PushVar: stack[++top] = env[op.arg]; break;
      case C::Add: --top; stack[top] += stack[top + 1]; break;
      case C::Sub: --top; stack[top] -= stack[top + 1]; break;
      case C::Mul: --top; stack[top] *= stack[top + 1]; break;
      case C::Div: --top; stack[top] /= stack[top + 1]; break;
      case C::Neg: stack[top] = -stack[top]; break;
      case C::Pow: --top; stack[top] = std::pow(stack[top], stack[top + 1]); break;
      case C::PowInt: {
        double base = stack[top], r = 1.0;
        for (int k = 0; k < op.arg; ++k) r *= base;
        stack[top] = r;
        break;
      }
      case C::Sqrt: stack[top] = std::sqrt(stack[top]); break;
      case C::Sin: stack[top] = std::sin(stack[top]); break;
      case C::Cos: stack[top] = std::cos(stack[top]); break;
    }
  }
  return stack[0];
}

// ------------------------------------------------------------------- parsing

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  int line;
  int col_base;  // column of text[0] in the original line
  std::vector<CenterExpr::Op>* out;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col_base + static_cast<int>(pos), msg);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void emit(CenterExpr::Op::Code c, double v = 0.0, int a = 0) {
    out->push_back({c, v, a});
  }

  void parse_expr() {
    parse_term();
    for (;;) {
      if (eat('+')) { parse_term(); emit(CenterExpr::Op::Code::Add); }
      else if (eat('-')) { parse_term(); emit(CenterExpr::Op::Code::Sub); }
      else break;
    }
  }
  void parse_term() {
    parse_unary();
    for (;;) {
      if (eat('*')) { parse_unary(); emit(CenterExpr::Op::Code::Mul); }
      else if (eat('/')) { parse_unary(); emit(CenterExpr::Op::Code::Div); }
      else break;
    }
  }
  void parse_unary() {
    if (eat('-')) { parse_unary(); emit(CenterExpr::Op::Code::Neg); return; }
    parse_power();
  }
  void parse_power() {
    parse_primary();
    if (eat('^')) {
      // exponents: integer fast path, otherwise general pow
      skip_ws();
      std::size_t save = pos;
      bool neg = eat('-');
      if (!neg && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && (text[pos] == '.' || text[pos] == '(')) {
          pos = save;  // not a plain integer exponent
        } else {
          int e = std::atoi(std::string(text.substr(start, pos - start)).c_str());
          emit(CenterExpr::Op::Code::PowInt, 0.0, e);
          return;
        }
      } else {
        pos = save;
      }
      parse_unary();
      emit(CenterExpr::Op::Code::Pow);
    }
  }
  void parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      parse_expr();
      if (!eat(')')) fail("unclosed parenthesis");
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      std::string tail(text.substr(pos));
      double v = std::strtod(tail.c_str(), &end);
      if (end == tail.c_str()) fail("malformed number");
      pos += static_cast<std::size_t>(end - tail.c_str());
      emit(CenterExpr::Op::Code::PushConst, v);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view name = text.substr(start, pos - start);
      static constexpr std::string_view vars = "abcSABC";
      if (name.size() == 1) {
        auto i = vars.find(name[0]);
        if (i == std::string_view::npos) fail("unknown variable '" + std::string(name) + "'");
        emit(CenterExpr::Op::Code::PushVar, 0.0, static_cast<int>(i));
        return;
      }
      CenterExpr::Op::Code fn;
      if (name == "sqrt") fn = CenterExpr::Op::Code::Sqrt;
      else if (name == "sin") fn = CenterExpr::Op::Code::Sin;
      else if (name == "cos") fn = CenterExpr::Op::Code::Cos;
      else fail("unknown function '" + std::string(name) + "'");
      if (!eat('(')) fail("expected '(' after function name");
      parse_expr();
      if (!eat(')')) fail("unclosed parenthesis");
      emit(fn);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

int compute_stack_depth(const std::vector<CenterExpr::Op>& code) {
  int depth = 0, maxd = 0;
  for (const auto& op : code) {
    using C = CenterExpr::Op::Code;
    switch (op.code) {
      case C::PushConst: case C::PushVar: ++depth; break;
      case C::Add: case C::Sub: case C::Mul: case C::Div: case C::Pow: --depth; break;
      default: break;
    }
    maxd = std::max(maxd, depth);
  }
  return maxd;
}

CenterExpr parse_expr_at(std::string_view text, int line, int col_base) {
  CenterExpr e;
  Parser p{text, 0, line, col_base, &e.code};
  p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  if (compute_stack_depth(e.code) > 60)
    p.fail("expression too deeply nested");
  return e;
}

}  // namespace

CenterExpr parse_center_expr(std::string_view text) {
  return parse_expr_at(text, 1, 1);
}

const CenterDef& CenterRegistry::at(int n) const {
  auto it = centers.find(n);
  if (it == centers.end())
    throw std::out_of_range("center X" + std::to_string(n) + " not in registry");
  return it->second;
}

std::vector<int> CenterRegistry::indices() const {
  std::vector<int> out;
  out.reserve(centers.size());
  for (const auto& [n, _] : centers) out.push_back(n);
  return out;
}

CenterRegistry parse_center_file(std::string_view text) {
  CenterRegistry reg;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++line_no;
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') continue;

    std::size_t eq = line.find('=', i);
    if (eq == std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(i) + 1, "expected 'INDEX = KIND : EXPR'");
    int index = 0;
    {
      std::size_t j = i;
      while (j < eq && std::isdigit(static_cast<unsigned char>(line[j]))) {
        index = index * 10 + (line[j] - '0');
        ++j;
      }
      while (j < eq && line[j] == ' ') ++j;
      if (j != eq || index <= 0)
        throw ParseError(line_no, static_cast<int>(i) + 1, "malformed center index");
    }
    std::size_t colon = line.find(':', eq + 1);
    if (colon == std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(eq) + 2, "expected ':' after coordinate kind");
    std::string kind_s;
    for (std::size_t j = eq + 1; j < colon; ++j)
      if (!std::isspace(static_cast<unsigned char>(line[j]))) kind_s += line[j];
    CoordKind kind;
    if (kind_s == "bary") kind = CoordKind::Barycentric;
    else if (kind_s == "tril") kind = CoordKind::Trilinear;
    else
      throw ParseError(line_no, static_cast<int>(eq) + 2,
                       "unknown coordinate kind '" + kind_s + "'");
    if (reg.centers.count(index))
      throw ParseError(line_no, static_cast<int>(i) + 1,
                       "duplicate center index " + std::to_string(index));

    std::string_view expr_text = line.substr(colon + 1);
    CenterDef def;
    def.index = index;
    def.kind = kind;
    def.expr = std::make_shared<CenterExpr>(
        parse_expr_at(expr_text, line_no, static_cast<int>(colon) + 2));
    def.source = std::string(expr_text);
    reg.centers.emplace(index, std::move(def));
  }

  // record centers that evaluate to the line at infinity on generic triangles
  static const double probes[3][3] = {{3, 4, 5}, {2.3, 3.1, 4.0}, {1.1, 1.7, 2.2}};
  for (const auto& [n, def] : reg.centers) {
    bool all_inf = true;
    for (const auto& p : probes)
      if (eval_center(def, p[0], p[1], p[2]).status != EvalStatus::AtInfinity)
        all_inf = false;
    if (all_inf) reg.at_infinity.insert(n);
  }
  return reg;
}

const CenterRegistry& default_registry() {
  static const CenterRegistry reg = [] {
    if (const char* path = std::getenv("CQ_CENTER_FILE")) {
      std::string contents;
      if (FILE* f = std::fopen(path, "rb")) {
        char buf[4096];
        std::size_t n;
        while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) contents.append(buf, n);
        std::fclose(f);
        return parse_center_file(contents);
      }
      throw std::runtime_error(std::string("CQ_CENTER_FILE not readable: ") + path);
    }
    return parse_center_file(detail::bundled_center_text());
  }();
  return reg;
}

EvalResult eval_center(const CenterDef& def, double a, double b, double c) {
  const double heron = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
  const double S = heron > 0.0 ? std::sqrt(heron) / 2.0 : 0.0;
  auto angle = [](double num, double den) {
    return std::acos(std::clamp(num / den, -1.0, 1.0));
  };
  const double A = angle(b * b + c * c - a * a, 2 * b * c);
  const double B = angle(c * c + a * a - b * b, 2 * c * a);
  const double C = angle(a * a + b * b - c * c, 2 * a * b);

  const double envs[3][7] = {{a, b, c, S, A, B, C},
                             {b, c, a, S, B, C, A},
                             {c, a, b, S, C, A, B}};
  double x[3];
  for (int k = 0; k < 3; ++k) {
    x[k] = def.expr->eval(envs[k]);
    if (!std::isfinite(x[k])) return {EvalStatus::Undefined, {}};
  }
  if (def.kind == CoordKind::Trilinear) {
    x[0] *= a;
    x[1] *= b;
    x[2] *= c;
  }
  const double n1 = std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]);
  if (n1 == 0.0) return {EvalStatus::Undefined, {}};
  const double s = x[0] + x[1] + x[2];
  if (std::abs(s) < 1e-9 * n1) return {EvalStatus::AtInfinity, {}};
  return {EvalStatus::Finite, Bary{x[0] / s, x[1] / s, x[2] / s}};
}

// --------------------------------------------------------------- classifiers

std::optional<SmallRational> recognize_small_rational(double x, long long max_den,
                                                      double tol) {
  for (long long q = 1; q <= max_den; ++q) {
    const double pq = x * static_cast<double>(q);
    const double p = std::round(pq);
    if (std::abs(pq - p) <= tol * static_cast<double>(q) * std::max(1.0, std::abs(x))) {
      long long pi = static_cast<long long>(p);
      long long g = std::gcd(std::abs(pi), q);
      if (g == 0) g = 1;
      return SmallRational{pi / g, q / g};
    }
  }
  return std::nullopt;
}

namespace {

bool nearly_equal_set(const std::vector<double>& vals, double tol) {
  if (vals.empty()) return false;
  const auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
  return (*hi - *lo) <= tol * std::max(1.0, std::max(std::abs(*lo), std::abs(*hi)));
}

}  // namespace

IsoClassification classify_isosceles_behavior(const CenterDef& def, int samples,
                                              std::uint64_t seed) {
  int apex = 0, mid = 0, inf = 0;
  std::vector<double> ks;
  for (int i = 0; i < samples; ++i) {
    const double b = 0.6 + 1.4 * detail::mix_unit(seed);
    const double a = (0.25 + 1.65 * detail::mix_unit(seed)) * b;
    const EvalResult r = eval_center(def, a, b, b);
    if (r.status == EvalStatus::AtInfinity) { ++inf; continue; }
    if (r.status == EvalStatus::Undefined) return {IsoBehavior::NonConstant, 0.0, {}};
    const Bary& p = r.coords;
    if (std::abs(p.v) < 1e-9 && std::abs(p.w) < 1e-9) { ++apex; continue; }
    if (std::abs(p.u) < 1e-9 && std::abs(p.v - p.w) < 1e-7) { ++mid; continue; }
    ks.push_back(p.u / (p.u + 2 * p.v));
  }
  if (inf == samples) return {IsoBehavior::AtInfinity, 0.0, {}};
  if (apex == samples) return {IsoBehavior::AtApex, 1.0, {}};
  if (mid == samples) return {IsoBehavior::AtBaseMidpoint, 0.0, {}};
  if (static_cast<int>(ks.size()) == samples && nearly_equal_set(ks, 1e-9)) {
    const double k = ks[0];
    return {IsoBehavior::ConstantRatio, k, recognize_small_rational(k, 64)};
  }
  return {IsoBehavior::NonConstant, 0.0, {}};
}

RightClassification classify_right_triangle_ratio(const CenterDef& def, int samples,
                                                  std::uint64_t seed) {
  int at_m = 0, inf = 0;
  std::vector<double> ratios;
  for (int i = 0; i < samples; ++i) {
    const double b = 0.6 + 1.4 * detail::mix_unit(seed);
    const double c = 0.6 + 1.4 * detail::mix_unit(seed);
    const double a = std::hypot(b, c);
    const EvalResult r = eval_center(def, a, b, c);
    if (r.status == EvalStatus::AtInfinity) { ++inf; continue; }
    if (r.status == EvalStatus::Undefined) return {RightBehavior::NotOnMedian, 0.0, {}};
    const Bary& p = r.coords;
    if (std::abs(p.v - p.w) > 1e-8) return {RightBehavior::NotOnMedian, 0.0, {}};
    if (std::abs(p.u) < 1e-9) { ++at_m; continue; }
    const double d = std::abs(1.0 - p.u);
    if (d < 1e-12) return {RightBehavior::OnMedianNonConstant, 0.0, {}};  // at A
    ratios.push_back(1.0 / d);
  }
  if (inf == samples) return {RightBehavior::AtInfinity, 0.0, {}};
  if (at_m == samples) return {RightBehavior::AtHypotenuseMidpoint, 1.0, {}};
  if (static_cast<int>(ratios.size()) == samples && nearly_equal_set(ratios, 1e-9)) {
    const double r = ratios[0];
    return {RightBehavior::ConstantRatio, r, recognize_small_rational(r, 64)};
  }
  return {RightBehavior::OnMedianNonConstant, 0.0, {}};
}

}  // namespace cq
