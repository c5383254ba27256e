#ifndef PDP_SEMAEV_HPP
#define PDP_SEMAEV_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdp/curve.hpp"
#include "pdp/mvpoly.hpp"

namespace pdp {

/// Which evaluation class a system equation came from: S_{m,1} is the full
/// m-variable Semaev polynomial, S_{m,2} has its last variable bound to x_R.
struct SemaevClass {
  int m = 0;
  bool evaluated = false;
  std::optional<FieldElement> evaluated_at;

  static SemaevClass full(int m) { return {m, false, std::nullopt}; }
  static SemaevClass bound(int m, FieldElement x_r) { return {m, true, std::move(x_r)}; }
  std::string label() const;  // "S_{m,1}" or "S_{m,2}"
};

/// S_3 = (x1 x2 + x1 x3 + x2 x3)^2 + x1 x2 x3 + b, the recursion base.
MvPoly s3(const CurveParams& E, const std::string& v1, const std::string& v2,
          const std::string& v3);

/// S_i for 3 <= i <= 6 by the resultant recursion
///   S_i = Res_X(S_{i-j}(x_1..x_{i-j-1}, X), S_{j+2}(x_{i-j}..x_i, X)).
/// Default split is j = 1, except S_6 which pairs two S_4 (j = 2). Any legal j
/// may be forced; different j agree on the vanishing locus, not term-by-term.
MvPoly semaev_poly(const CurveParams& E, int i, const std::vector<std::string>& vars,
                   std::optional<int> j_split = std::nullopt);

}  // namespace pdp

#endif
