#include "pdp/semaev.hpp"

#include <sstream>

namespace pdp {

std::string SemaevClass::label() const {
  std::ostringstream os;
  os << "S_{" << m << "," << (evaluated ? 2 : 1) << "}";
  return os.str();
}

MvPoly s3(const CurveParams& E, const std::string& v1, const std::string& v2,
          const std::string& v3) {
  MvPoly p(E.ctx, {v1, v2, v3});
  const FieldElement one = E.ctx->one();
  p.add_term({2, 2, 0}, one);
  p.add_term({2, 0, 2}, one);
  p.add_term({0, 2, 2}, one);
  p.add_term({1, 1, 1}, one);
  p.add_term({0, 0, 0}, E.b);
  return p;
}

MvPoly semaev_poly(const CurveParams& E, int i, const std::vector<std::string>& vars,
                   std::optional<int> j_split) {
  require(i >= 3 && i <= 6, Errc::Unsupported, "semaev_poly supports 3 <= i <= 6");
  require(int(vars.size()) == i, Errc::DegreeMismatch,
          "S_i needs exactly i variable names");
  if (i == 3) {
    require(!j_split || *j_split == 0 || *j_split == 1, Errc::Unsupported,
            "S_3 admits no split");
    return s3(E, vars[0], vars[1], vars[2]);
  }
  int j = j_split.value_or(i == 6 ? 2 : 1);
  require(j >= 1 && j <= i - 3, Errc::Unsupported, "split j must satisfy 1 <= j <= i-3");

  std::string X = "_X" + std::to_string(i);
  for (const auto& v : vars)
    require(v != X, Errc::DuplicateVariable, "variable name '" + X + "' is reserved");

  std::vector<std::string> left(vars.begin(), vars.begin() + (i - j - 1));
  left.push_back(X);
  std::vector<std::string> right(vars.begin() + (i - j - 1), vars.end());
  right.push_back(X);

  MvPoly L = semaev_poly(E, i - j, left);
  MvPoly R = semaev_poly(E, j + 2, right);
  return resultant(L, R, X).aligned_to(vars);
}

}  // namespace pdp
