#ifndef PDP_MVPOLY_HPP
#define PDP_MVPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdp/gf2n.hpp"

namespace pdp {

/// Sparse multivariate polynomial over F_{2^n}. Terms map dense exponent
/// vectors (one slot per variable, in variable order) to nonzero coefficients.
/// Few variables, modest degrees: perfect for a plain ordered map.
class MvPoly {
 public:
  using Exponents = std::vector<uint16_t>;

  MvPoly() = default;
  MvPoly(ContextPtr ctx, std::vector<std::string> vars);

  static MvPoly constant(const ContextPtr& ctx, const FieldElement& c,
                         std::vector<std::string> vars = {});
  static MvPoly variable(const ContextPtr& ctx, std::vector<std::string> vars,
                         std::size_t index);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<std::string>& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }

  /// Adds c * prod vars^exps (coefficients accumulate mod 2-characteristic).
  void add_term(const Exponents& exps, const FieldElement& c);

  MvPoly operator+(const MvPoly& o) const;
  MvPoly operator*(const MvPoly& o) const;
  MvPoly scale(const FieldElement& c) const;
  MvPoly mul_by_monomial(const Exponents& exps, const FieldElement& c) const;

  int degree_in(const std::string& var) const;
  int total_degree() const;

  FieldElement evaluate(const std::unordered_map<std::string, FieldElement>& assignment) const;
  /// Binds a subset of the variables; the result ranges over the remaining ones.
  MvPoly evaluate_partial(const std::unordered_map<std::string, FieldElement>& assignment) const;
  MvPoly evaluate_last(const FieldElement& value) const;

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MvPoly coefficient_of(const std::string& var, unsigned k) const;

  /// Exponent vectors present, grevlex-descending (for stable output/tests).
  std::vector<Exponents> support() const;

  /// "+"-joined "coefHex*x1^e1*..." with grevlex-descending terms; "0" if zero.
  std::string to_string() const;

  /// Rewrites onto a variable superset (order given by target).
  MvPoly aligned_to(const std::vector<std::string>& target_vars) const;

 private:
  std::size_t var_index(const std::string& var) const;

  ContextPtr ctx_;
  std::vector<std::string> vars_;
  std::map<Exponents, FieldElement> terms_;
};

/// Grevlex comparison of exponent vectors of equal length: returns <0, 0, >0.
int grevlex_cmp(const MvPoly::Exponents& a, const MvPoly::Exponents& b);

/// Sylvester-matrix resultant w.r.t. X, by memoized minor expansion (char 2:
/// no signs). Both inputs must have positive degree in X; X is absent from
/// the result.
MvPoly resultant(const MvPoly& p, const MvPoly& q, const std::string& X);

}  // namespace pdp

#endif
