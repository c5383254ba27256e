#ifndef PDP_ANALYSIS_HPP
#define PDP_ANALYSIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "pdp/systems.hpp"

namespace pdp {

using BigInt = boost::multiprecision::cpp_int;

/// Upper-bound witness for the first fall degree of one system equation:
/// multiplying the source by the recorded multiplier must not raise the
/// descended degree, while the multiplier itself descends to positive degree.
/// All three degrees are recomputed, never asserted.
struct FirstFallCertificate {
  std::string source;
  SemaevClass source_class;
  MvPoly multiplier;
  int source_descended_max_deg = 0;
  int multiplier_descended_max_deg = 0;
  int product_descended_max_deg = 0;
  int bound = 0;  // source + multiplier descended degrees
  bool degree_fall_verified = false;
};

std::vector<FirstFallCertificate> first_fall_bound(const SystemVariant& variant,
                                                   const ContextPtr& ctx);
int system_first_fall_bound(const std::vector<FirstFallCertificate>& certs);

/// Two ways to price the Macaulay step: the exact binomial
/// binom(N+D-1, D)^w, or the power form N^{Dw} the published estimates use.
enum class CostAccounting { PowerForm, ExactBinomial };

struct CostEstimate {
  double n = 0, m = 0, n_prime = 0;
  int D_reg = 0;
  double w = 3, w_prime = 2;
  double N = 0;
  CostAccounting accounting = CostAccounting::PowerForm;
  double relation_cost_log2 = 0;
  double linalg_cost_log2 = 0;
  double total_log2 = 0;
};

/// Cost of the full ECDLP via 2^{n'} (2^n m!/2^{mn'}) C + 2^{w' n'} where C is
/// the per-PDP Groebner cost under the chosen accounting. Binomials are exact
/// big integers; only the final log2 is floating point.
CostEstimate ecdlp_cost(double n, double m, double n_prime, int D_reg, double w,
                        double w_prime, double N, CostAccounting accounting);

/// Least n in [lo, hi] where the model (with n' = n/m, N = N_factor * n)
/// beats the 2^{n/2} square-root bound; 0 when none.
unsigned crossover_vs_sqrt(double m, int D_reg, double w, double w_prime,
                           double N_factor, unsigned lo, unsigned hi,
                           CostAccounting accounting);

/// Exact 2^{mn'} / (2^n m!), with mn' <= n.
struct DecompositionProbability {
  BigInt num;
  BigInt den;
  double value() const;
};
DecompositionProbability decomposition_probability(unsigned n, unsigned m, unsigned n_prime);

double log2_big(const BigInt& x);
BigInt binomial(uint64_t top, uint64_t k);
BigInt factorial(unsigned k);

/// CSV rows "n,m,variant,D,N,relation_log2,linalg_log2,total_log2".
std::string cost_table_csv(const std::vector<std::pair<std::string, CostEstimate>>& rows);

}  // namespace pdp

#endif
