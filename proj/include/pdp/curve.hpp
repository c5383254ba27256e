#ifndef PDP_CURVE_HPP
#define PDP_CURVE_HPP

#include <random>
#include <string>
#include <vector>

#include "pdp/gf2n.hpp"

namespace pdp {

/// Non-singular binary curve y^2 + xy = x^3 + a x^2 + b over one FieldContext.
/// Non-singularity for this shape is exactly b != 0.
struct CurveParams {
  ContextPtr ctx;
  FieldElement a;
  FieldElement b;

  CurveParams(ContextPtr c, FieldElement a_, FieldElement b_);
  unsigned n() const { return ctx->degree(); }
};

/// Affine point or the identity. Negation is (x, y) -> (x, x + y).
struct Point {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  Point() = default;
  Point(FieldElement px, FieldElement py) : infinity(false), x(px), y(py) {}
  static Point make_infinity() { return Point(); }

  bool operator==(const Point& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

bool is_on_curve(const CurveParams& E, const Point& P);
Point neg(const Point& P);
Point add(const CurveParams& E, const Point& P, const Point& Q);
Point sub(const CurveParams& E, const Point& P, const Point& Q);
Point scalar_mul(const CurveParams& E, uint64_t k, const Point& P);

/// All points with the given x-coordinate (0, 1 or 2 of them). Solves the
/// Artin-Schreier equation z^2 + z = (x^3 + a x^2 + b)/x^2 with the half-trace
/// on odd n and the context's linear solver otherwise; x = 0 gives (0, sqrt b).
std::vector<Point> lift_x(const CurveParams& E, const FieldElement& x);

/// Every point including the identity; guarded to n <= 20.
std::vector<Point> enumerate_points(const CurveParams& E);

Point random_point(const CurveParams& E, uint64_t seed);
Point random_point(const CurveParams& E, std::mt19937_64& rng);

/// Random curve for experiments: uniform (a, b) with b != 0.
CurveParams random_curve(const ContextPtr& ctx, uint64_t seed);
CurveParams random_curve(const ContextPtr& ctx, std::mt19937_64& rng);

// Text forms: point "(hex_x,hex_y)" or "inf"; curve "n;modulus;a;b".
std::string point_to_string(const Point& P);
Point parse_point(const CurveParams& E, const std::string& text);
std::string curve_to_string(const CurveParams& E);
CurveParams parse_curve(const std::string& text);

}  // namespace pdp

#endif
