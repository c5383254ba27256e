#ifndef PDP_DESCENT_HPP
#define PDP_DESCENT_HPP

#include <vector>

#include "pdp/boolring.hpp"
#include "pdp/curve.hpp"
#include "pdp/mvpoly.hpp"

namespace pdp {

/// A field element whose coordinates (w.r.t. the polynomial basis 1, s, ...,
/// s^{n-1}) are boolean polynomials: the carrier of the Weil descent.
struct SymbolicFieldElement {
  ContextPtr ctx;
  UniversePtr universe;
  std::vector<BoolPoly> coords;  // length n

  unsigned n() const { return ctx->degree(); }
};

/// Fresh variable expansion of block `name`: coordinate j < dim is the single
/// variable (offset + j), the rest are zero.
SymbolicFieldElement symbolic_var(const ContextPtr& ctx, const UniversePtr& u,
                                  const std::string& name);
SymbolicFieldElement embed_constant(const ContextPtr& ctx, const UniversePtr& u,
                                    const FieldElement& c);
SymbolicFieldElement sym_add(const SymbolicFieldElement& a, const SymbolicFieldElement& b);
/// Coordinate-wise carry-less convolution followed by reduction mod f via the
/// context's precomputed rewrite rows for s^n .. s^{2n-2}.
SymbolicFieldElement sym_mul(const SymbolicFieldElement& a, const SymbolicFieldElement& b);
/// Squaring is F_2-linear; uses the s^{2j} table, no polynomial products.
SymbolicFieldElement sym_square(const SymbolicFieldElement& a);
/// a scaled by a constant field element.
SymbolicFieldElement sym_scale(const SymbolicFieldElement& a, const FieldElement& c);

/// Reassemble a field element from an assignment (cross-check oracle).
FieldElement sym_evaluate(const SymbolicFieldElement& a, const BoolMonomial& assignment);

/// Weil descent of a set of field equations: every MvPoly variable expands
/// into the boolean block of the same name, each equation contributes exactly
/// n coordinate equations (zero ones retained).
BoolSystem descend(const ContextPtr& ctx, const std::vector<MvPoly>& equations,
                   const std::vector<std::pair<std::string, unsigned>>& blocks);

/// Descent of one polynomial over an existing universe.
SymbolicFieldElement descend_poly(const ContextPtr& ctx, const UniversePtr& u,
                                  const MvPoly& p);

/// Points with x in V = span{1, s, ..., s^{n'-1}}; closed under negation.
struct FactorBase {
  unsigned dim = 0;  // n'
  std::vector<Point> members;

  bool contains_x(const FieldElement& x) const {
    return (x.bits() >> dim) == 0;
  }
};

FactorBase build_factor_base(const CurveParams& E, unsigned n_prime);

}  // namespace pdp

#endif
