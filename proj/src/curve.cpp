#include "pdp/curve.hpp"

#include <cassert>
#include <sstream>

namespace pdp {

CurveParams::CurveParams(ContextPtr c, FieldElement a_, FieldElement b_)
    : ctx(std::move(c)), a(std::move(a_)), b(std::move(b_)) {
  require(ctx && a.context() && ctx->same(*a.context()) && b.context() &&
              ctx->same(*b.context()),
          Errc::ContextMismatch, "curve coefficients from a different context");
  require(!b.is_zero(), Errc::DegreeMismatch, "b = 0 gives a singular curve");
}

bool is_on_curve(const CurveParams& E, const Point& P) {
  if (P.infinity) return true;
  const FieldElement& x = P.x;
  const FieldElement& y = P.y;
  FieldElement lhs = y * y + x * y;
  FieldElement rhs = x * x * x + E.a * x * x + E.b;
  return lhs == rhs;
}

Point neg(const Point& P) {
  if (P.infinity) return P;
  return Point(P.x, P.x + P.y);
}

Point add(const CurveParams& E, const Point& P, const Point& Q) {
  require(is_on_curve(E, P) && is_on_curve(E, Q), Errc::NotOnCurve,
          "add operand not on curve");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.x == Q.x) {
    if (P.y != Q.y) return Point::make_infinity();  // Q = -P
    if (P.x.is_zero()) return Point::make_infinity();  // 2-torsion
    // doubling: lambda = x + y/x
    FieldElement lam = P.x + P.y * P.x.inv();
    FieldElement x3 = lam * lam + lam + E.a;
    FieldElement y3 = P.x * P.x + (lam + E.ctx->one()) * x3;
    Point R(x3, y3);
    assert(is_on_curve(E, R));
    return R;
  }
  FieldElement lam = (P.y + Q.y) * (P.x + Q.x).inv();
  FieldElement x3 = lam * lam + lam + P.x + Q.x + E.a;
  FieldElement y3 = lam * (P.x + x3) + x3 + P.y;
  Point R(x3, y3);
  assert(is_on_curve(E, R));
  return R;
}

Point sub(const CurveParams& E, const Point& P, const Point& Q) {
  return add(E, P, neg(Q));
}

Point scalar_mul(const CurveParams& E, uint64_t k, const Point& P) {
  require(is_on_curve(E, P), Errc::NotOnCurve, "scalar_mul operand not on curve");
  Point acc = Point::make_infinity();
  Point base = P;
  while (k) {
    if (k & 1) acc = add(E, acc, base);
    k >>= 1;
    if (k) base = add(E, base, base);
  }
  return acc;
}

std::vector<Point> lift_x(const CurveParams& E, const FieldElement& x) {
  const FieldContext& F = *E.ctx;
  if (x.is_zero()) return {Point(x, E.b.sqrt())};
  // z^2 + z = c with c = x + a + b/x^2, then y = x z.
  FieldElement c = x + E.a + E.b * (x * x).inv();
  uint64_t z;
  if (F.degree() % 2 == 1) {
    if (F.trace_raw(c.bits()) != 0) return {};
    z = F.half_trace_raw(c.bits());
  } else {
    auto sol = F.solve_quadratic_raw(c.bits());
    if (!sol) return {};
    z = *sol;
  }
  FieldElement y = x * F.element(z);
  Point P(x, y);
  assert(is_on_curve(E, P));
  return {P, neg(P)};
}

std::vector<Point> enumerate_points(const CurveParams& E) {
  unsigned n = E.n();
  require(n <= 20, Errc::TooLarge, "enumerate_points guarded to n <= 20");
  std::vector<Point> pts;
  pts.push_back(Point::make_infinity());
  uint64_t count = uint64_t(1) << n;
  for (uint64_t v = 0; v < count; ++v) {
    for (auto& P : lift_x(E, E.ctx->element(v))) pts.push_back(P);
  }
  return pts;
}

Point random_point(const CurveParams& E, std::mt19937_64& rng) {
  for (;;) {
    FieldElement x = E.ctx->random_element(rng);
    auto lifts = lift_x(E, x);
    if (lifts.empty()) continue;
    return lifts[rng() % lifts.size()];
  }
}

Point random_point(const CurveParams& E, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point(E, rng);
}

CurveParams random_curve(const ContextPtr& ctx, std::mt19937_64& rng) {
  FieldElement a = ctx->random_element(rng);
  FieldElement b = ctx->random_element(rng);
  while (b.is_zero()) b = ctx->random_element(rng);
  return CurveParams(ctx, a, b);
}

CurveParams random_curve(const ContextPtr& ctx, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_curve(ctx, rng);
}

std::string point_to_string(const Point& P) {
  if (P.infinity) return "inf";
  return "(" + P.x.to_hex() + "," + P.y.to_hex() + ")";
}

Point parse_point(const CurveParams& E, const std::string& text) {
  if (text == "inf") return Point::make_infinity();
  require(text.size() >= 5 && text.front() == '(' && text.back() == ')',
          Errc::ParseError, "bad point '" + text + "'");
  auto comma = text.find(',');
  require(comma != std::string::npos, Errc::ParseError, "bad point '" + text + "'");
  FieldElement x = E.ctx->from_hex(text.substr(1, comma - 1));
  FieldElement y = E.ctx->from_hex(text.substr(comma + 1, text.size() - comma - 2));
  Point P(x, y);
  require(is_on_curve(E, P), Errc::NotOnCurve, "parsed point not on curve");
  return P;
}

std::string curve_to_string(const CurveParams& E) {
  std::ostringstream os;
  os << E.n() << ";" << E.ctx->modulus_string() << ";" << E.a.to_hex() << ";"
     << E.b.to_hex();
  return os.str();
}

CurveParams parse_curve(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(';', pos);
    parts.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  require(parts.size() == 4, Errc::ParseError, "curve text needs 4 ';' fields");
  unsigned n = 0;
  for (char ch : parts[0]) {
    require(isdigit(static_cast<unsigned char>(ch)), Errc::ParseError, "bad degree field");
    n = n * 10 + unsigned(ch - '0');
  }
  auto [pn, tail] = parse_modulus_string(parts[1]);
  require(pn == n, Errc::ParseError, "modulus degree disagrees with n field");
  ContextPtr ctx = FieldContext::make_with_tail(n, tail);
  return CurveParams(ctx, ctx->from_hex(parts[2]), ctx->from_hex(parts[3]));
}

}  // namespace pdp
