#include "pdp/mvpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pdp {

MvPoly::MvPoly(ContextPtr ctx, std::vector<std::string> vars)
    : ctx_(std::move(ctx)), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      require(vars_[i] != vars_[j], Errc::DuplicateVariable,
              "duplicate variable '" + vars_[i] + "'");
}

MvPoly MvPoly::constant(const ContextPtr& ctx, const FieldElement& c,
                        std::vector<std::string> vars) {
  MvPoly p(ctx, std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
  return p;
}

MvPoly MvPoly::variable(const ContextPtr& ctx, std::vector<std::string> vars,
                        std::size_t index) {
  MvPoly p(ctx, std::move(vars));
  require(index < p.vars_.size(), Errc::VariableAbsent, "variable index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), ctx->one());
  return p;
}

void MvPoly::add_term(const Exponents& exps, const FieldElement& c) {
  require(exps.size() == vars_.size(), Errc::DegreeMismatch,
          "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::size_t MvPoly::var_index(const std::string& var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return i;
  fail(Errc::VariableAbsent, "variable '" + var + "' not in polynomial");
}

MvPoly MvPoly::aligned_to(const std::vector<std::string>& target_vars) const {
  std::vector<int> map(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < target_vars.size(); ++j)
      if (target_vars[j] == vars_[i]) { map[i] = int(j); break; }
    require(map[i] >= 0, Errc::VariableAbsent,
            "target variable list misses '" + vars_[i] + "'");
  }
  MvPoly r(ctx_, target_vars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(target_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

namespace {
std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> m = a;
  for (const auto& v : b)
    if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
  return m;
}
}  // namespace

MvPoly MvPoly::operator+(const MvPoly& o) const {
  require(ctx_ && o.ctx_ && ctx_->same(*o.ctx_), Errc::ContextMismatch,
          "polynomials over different contexts");
  auto vars = merged_vars(vars_, o.vars_);
  MvPoly a = aligned_to(vars);
  MvPoly b = o.aligned_to(vars);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  return a;
}

MvPoly MvPoly::operator*(const MvPoly& o) const {
  require(ctx_ && o.ctx_ && ctx_->same(*o.ctx_), Errc::ContextMismatch,
          "polynomials over different contexts");
  auto vars = merged_vars(vars_, o.vars_);
  MvPoly a = aligned_to(vars);
  MvPoly b = o.aligned_to(vars);
  MvPoly r(ctx_, vars);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = uint16_t(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MvPoly MvPoly::scale(const FieldElement& c) const {
  MvPoly r(ctx_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

MvPoly MvPoly::mul_by_monomial(const Exponents& exps, const FieldElement& c) const {
  require(exps.size() == vars_.size(), Errc::DegreeMismatch,
          "exponent vector length mismatch");
  MvPoly r(ctx_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, coef] : terms_) {
    Exponents ne(e);
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = uint16_t(ne[i] + exps[i]);
    r.terms_.emplace(std::move(ne), coef * c);
  }
  return r;
}

int MvPoly::degree_in(const std::string& var) const {
  std::size_t i = var_index(var);
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[i]));
  return d;
}

int MvPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto x : e) t += x;
    d = std::max(d, t);
  }
  return d;
}

FieldElement MvPoly::evaluate(
    const std::unordered_map<std::string, FieldElement>& assignment) const {
  for (const auto& v : vars_)
    require(assignment.count(v) > 0, Errc::UnassignedVariable,
            "no value for variable '" + v + "'");
  const FieldContext& F = *ctx_;
  // power cache per variable
  std::vector<std::vector<uint64_t>> powers(vars_.size());
  std::vector<uint64_t> base(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    base[i] = assignment.at(vars_[i]).bits();
    powers[i] = {1};
  }
  uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    uint64_t t = c.bits();
    for (std::size_t i = 0; i < e.size() && t; ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e[i]) pw.push_back(F.mul_raw(pw.back(), base[i]));
      t = F.mul_raw(t, pw[e[i]]);
    }
    acc ^= t;
  }
  return FieldElement(ctx_, acc);
}

MvPoly MvPoly::evaluate_partial(
    const std::unordered_map<std::string, FieldElement>& assignment) const {
  std::vector<std::string> rest;
  std::vector<int> bound(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (assignment.count(vars_[i])) bound[i] = 1;
    else rest.push_back(vars_[i]);
  }
  MvPoly r(ctx_, rest);
  const FieldContext& F = *ctx_;
  for (const auto& [e, c] : terms_) {
    uint64_t coef = c.bits();
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (bound[i] > 0) {
        coef = F.mul_raw(coef, F.pow_raw(assignment.at(vars_[i]).bits(), e[i]));
      } else {
        ne.push_back(e[i]);
      }
    }
    r.add_term(ne, FieldElement(ctx_, coef));
  }
  return r;
}

MvPoly MvPoly::evaluate_last(const FieldElement& value) const {
  require(!vars_.empty(), Errc::VariableAbsent, "no variables to evaluate");
  return evaluate_partial({{vars_.back(), value}});
}

MvPoly MvPoly::coefficient_of(const std::string& var, unsigned k) const {
  std::size_t idx = var_index(var);
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (i != idx) rest.push_back(vars_[i]);
  MvPoly r(ctx_, rest);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx) ne.push_back(e[i]);
    r.add_term(ne, c);
  }
  return r;
}

int grevlex_cmp(const MvPoly::Exponents& a, const MvPoly::Exponents& b) {
  int da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller on last diff wins
  }
  return 0;
}

std::vector<MvPoly::Exponents> MvPoly::support() const {
  std::vector<Exponents> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  std::sort(s.begin(), s.end(),
            [](const Exponents& a, const Exponents& b) { return grevlex_cmp(a, b) > 0; });
  return s;
}

std::string MvPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : support()) {
    if (!first) os << "+";
    first = false;
    os << terms_.at(e).to_hex();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// Memoized Laplace expansion over (row subset, implicit leading column).
// Char 2, so no cofactor signs.
class DetWorker {
 public:
  DetWorker(const std::vector<std::vector<MvPoly>>& m, ContextPtr ctx,
            std::vector<std::string> vars)
      : m_(m), ctx_(std::move(ctx)), vars_(std::move(vars)) {}

  MvPoly det(uint32_t row_mask) {
    auto it = memo_.find(row_mask);
    if (it != memo_.end()) return it->second;
    unsigned k = unsigned(m_.size()) - unsigned(std::popcount(row_mask));  // current column
    MvPoly r(ctx_, vars_);
    if (row_mask == 0) {
      r = MvPoly::constant(ctx_, ctx_->one(), vars_);
    } else {
      for (unsigned i = 0; i < m_.size(); ++i) {
        if (!((row_mask >> i) & 1)) continue;
        const MvPoly& entry = m_[i][k];
        if (entry.is_zero()) continue;
        r = r + entry * det(row_mask & ~(uint32_t(1) << i));
      }
    }
    memo_.emplace(row_mask, r);
    return r;
  }

 private:
  const std::vector<std::vector<MvPoly>>& m_;
  ContextPtr ctx_;
  std::vector<std::string> vars_;
  std::unordered_map<uint32_t, MvPoly> memo_;
};

}  // namespace

MvPoly resultant(const MvPoly& p, const MvPoly& q, const std::string& X) {
  int dp = p.degree_in(X);
  int dq = q.degree_in(X);
  require(dp >= 1, Errc::VariableAbsent, "first polynomial has degree 0 in " + X);
  require(dq >= 1, Errc::VariableAbsent, "second polynomial has degree 0 in " + X);
  const auto& ctx = p.context();
  require(ctx && q.context() && ctx->same(*q.context()), Errc::ContextMismatch,
          "resultant operands over different contexts");

  // variables of the result: union minus X
  std::vector<std::string> vars;
  for (const auto& v : p.vars())
    if (v != X) vars.push_back(v);
  for (const auto& v : q.vars())
    if (v != X && std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);

  std::vector<MvPoly> cp, cq;
  for (int k = 0; k <= dp; ++k) cp.push_back(p.coefficient_of(X, unsigned(k)).aligned_to(vars));
  for (int k = 0; k <= dq; ++k) cq.push_back(q.coefficient_of(X, unsigned(k)).aligned_to(vars));

  unsigned N = unsigned(dp + dq);
  require(N <= 20, Errc::TooLarge, "Sylvester matrix too large");
  MvPoly zero(ctx, vars);
  std::vector<std::vector<MvPoly>> syl(N, std::vector<MvPoly>(N, zero));
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j <= dp; ++j) syl[i][i + j] = cp[dp - j];
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j <= dq; ++j) syl[dq + i][i + j] = cq[dq - j];

  DetWorker worker(syl, ctx, vars);
  return worker.det((uint32_t(1) << N) - 1);
}

}  // namespace pdp
