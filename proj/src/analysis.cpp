#include "pdp/analysis.hpp"

#include <cmath>
#include <sstream>

namespace pdp {

namespace {

int max_coord_degree(const SymbolicFieldElement& e) {
  int d = -1;
  for (const auto& c : e.coords) d = std::max(d, c.degree());
  return d;
}

bool any_coord_nonzero(const SymbolicFieldElement& e) {
  for (const auto& c : e.coords)
    if (!c.is_zero()) return true;
  return false;
}

/// The paper's multiplier for each Semaev class: x1 for S_{3,1}, x3^3 for
/// S_{3,2}, x3 for S_{4,2} (first variable), x3 for S_{4,1} (third variable).
MvPoly paper_multiplier(const MvPoly& source, const SemaevClass& cls) {
  const auto& vars = source.vars();
  const ContextPtr& ctx = source.context();
  if (cls.m == 3 && !cls.evaluated) return MvPoly::variable(ctx, vars, 0);
  if (cls.m == 3 && cls.evaluated) {
    MvPoly cube(ctx, {vars[0]});
    cube.add_term({3}, ctx->one());
    return cube;
  }
  if (cls.m == 4 && cls.evaluated) return MvPoly::variable(ctx, vars, 0);
  if (cls.m == 4 && !cls.evaluated) return MvPoly::variable(ctx, vars, 2);
  fail(Errc::Unsupported, "no multiplier rule for " + cls.label());
}

}  // namespace

std::vector<FirstFallCertificate> first_fall_bound(const SystemVariant& variant,
                                                   const ContextPtr& ctx) {
  UniversePtr u = make_universe(variant.blocks);
  std::vector<FirstFallCertificate> certs;
  for (std::size_t k = 0; k < variant.field_equations.size(); ++k) {
    const MvPoly& src = variant.field_equations[k];
    const SemaevClass& cls = variant.classes[k];
    FirstFallCertificate cert;
    cert.source_class = cls;
    {
      std::ostringstream os;
      os << cls.label() << "(";
      for (std::size_t i = 0; i < src.vars().size(); ++i)
        os << (i ? "," : "") << src.vars()[i];
      os << ")";
      cert.source = os.str();
    }
    cert.multiplier = paper_multiplier(src, cls);
    MvPoly product = cert.multiplier * src;
    cert.source_descended_max_deg = max_coord_degree(descend_poly(ctx, u, src));
    cert.multiplier_descended_max_deg =
        max_coord_degree(descend_poly(ctx, u, cert.multiplier));
    SymbolicFieldElement dprod = descend_poly(ctx, u, product);
    cert.product_descended_max_deg = max_coord_degree(dprod);
    cert.bound = cert.source_descended_max_deg + cert.multiplier_descended_max_deg;
    cert.degree_fall_verified =
        any_coord_nonzero(dprod) && cert.product_descended_max_deg < cert.bound &&
        cert.multiplier_descended_max_deg > 0;
    certs.push_back(std::move(cert));
  }
  return certs;
}

int system_first_fall_bound(const std::vector<FirstFallCertificate>& certs) {
  int b = 0;
  for (const auto& c : certs) b = std::max(b, c.bound);
  return b;
}

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(uint64_t top, uint64_t k) {
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= BigInt(top - k + i);
    r /= BigInt(i);
  }
  return r;
}

double log2_big(const BigInt& x) {
  require(x > 0, Errc::Unsupported, "log2 of non-positive value");
  std::size_t bits = boost::multiprecision::msb(x);
  if (bits <= 52) return std::log2(x.convert_to<double>());
  BigInt shifted = x >> (bits - 52);
  return double(bits - 52) + std::log2(shifted.convert_to<double>());
}

namespace {
double log2_sum_exp2(double a, double b) {
  double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}
}  // namespace

CostEstimate ecdlp_cost(double n, double m, double n_prime, int D_reg, double w,
                        double w_prime, double N, CostAccounting accounting) {
  require(n > 0 && m > 0 && n_prime > 0 && D_reg > 0 && N > 0, Errc::Unsupported,
          "cost parameters must be positive");
  require(m * n_prime <= n + 1e-9, Errc::Unsupported, "need m n' <= n");
  CostEstimate est;
  est.n = n;
  est.m = m;
  est.n_prime = n_prime;
  est.D_reg = D_reg;
  est.w = w;
  est.w_prime = w_prime;
  est.N = N;
  est.accounting = accounting;

  double log2_macaulay;  // per-PDP cost C
  if (accounting == CostAccounting::ExactBinomial) {
    uint64_t Ni = uint64_t(std::llround(N));
    log2_macaulay = w * log2_big(binomial(Ni + uint64_t(D_reg) - 1, uint64_t(D_reg)));
  } else {
    log2_macaulay = w * double(D_reg) * std::log2(N);
  }
  double log2_mfact = log2_big(factorial(unsigned(std::llround(m))));
  est.relation_cost_log2 = n_prime + (n - m * n_prime) + log2_mfact + log2_macaulay;
  est.linalg_cost_log2 = w_prime * n_prime;
  est.total_log2 = log2_sum_exp2(est.relation_cost_log2, est.linalg_cost_log2);
  return est;
}

unsigned crossover_vs_sqrt(double m, int D_reg, double w, double w_prime,
                           double N_factor, unsigned lo, unsigned hi,
                           CostAccounting accounting) {
  for (unsigned n = lo; n <= hi; ++n) {
    CostEstimate est = ecdlp_cost(double(n), m, double(n) / m, D_reg, w, w_prime,
                                  N_factor * double(n), accounting);
    if (est.total_log2 < double(n) / 2.0) return n;
  }
  return 0;
}

double DecompositionProbability::value() const {
  return std::exp2(log2_big(num) - log2_big(den));
}

DecompositionProbability decomposition_probability(unsigned n, unsigned m,
                                                   unsigned n_prime) {
  require(uint64_t(m) * n_prime <= n, Errc::Unsupported, "need m n' <= n");
  DecompositionProbability p;
  p.num = BigInt(1) << (m * n_prime);
  p.den = (BigInt(1) << n) * factorial(m);
  BigInt g = boost::multiprecision::gcd(p.num, p.den);
  p.num /= g;
  p.den /= g;
  return p;
}

std::string cost_table_csv(const std::vector<std::pair<std::string, CostEstimate>>& rows) {
  std::ostringstream os;
  os << "n,m,variant,D,N,relation_log2,linalg_log2,total_log2\n";
  os.setf(std::ios::fixed);
  os.precision(1);
  for (const auto& [variant, e] : rows) {
    os << e.n << "," << e.m << "," << variant << "," << e.D_reg << "," << e.N << ","
       << e.relation_cost_log2 << "," << e.linalg_cost_log2 << "," << e.total_log2
       << "\n";
  }
  return os.str();
}

}  // namespace pdp
