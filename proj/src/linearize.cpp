#include <algorithm>
#include <chrono>
#include <map>

#include "pdp/f2linalg.hpp"
#include "pdp/solver.hpp"

// Linearization backend: every distinct monomial becomes a fresh F_2 unknown,
// the system turns into a linear one and is Gauss-eliminated. Rows of the
// echelon form supported on degree<=1 columns constrain the original
// variables directly; the affine space they cut out is enumerated and each
// candidate is verified against the original (nonlinear) system, so the
// returned set is exact whenever the free dimension fits the guard.

namespace pdp {

namespace {
using Clock = std::chrono::steady_clock;

struct MonoGrevlexDesc {
  bool operator()(const BoolMonomial& a, const BoolMonomial& b) const {
    return BoolMonomial::cmp(a, b) > 0;
  }
};
}  // namespace

SolveReport linearize_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg) {
  (void)fb_bits;
  cfg.validate();
  auto t0 = Clock::now();
  SolveReport r;
  r.backend = Backend::Linearize;

  std::vector<const BoolPoly*> eqs;
  for (const auto& eq : sys.equations) {
    if (eq.is_zero()) continue;
    eqs.push_back(&eq);
    r.max_step_degree = std::max(r.max_step_degree, eq.degree());
  }
  const unsigned total = sys.universe->total();
  if (eqs.empty()) {
    r.status = SolveStatus::Solved;
    r.solutions.push_back(BoolMonomial::one());
    r.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }

  // column layout: monomials grevlex-descending (nonlinear first), then the
  // affine constant as the last column
  std::map<BoolMonomial, std::size_t, MonoGrevlexDesc> col_of;
  for (const auto* eq : eqs)
    for (const auto& m : eq->monomials())
      if (!m.is_one()) col_of.emplace(m, 0);
  require(col_of.size() <= cfg.max_linearize_monomials, Errc::TooManyMonomials,
          "distinct monomial count exceeds the configured bound");
  std::size_t ncols = 0;
  for (auto& [m, idx] : col_of) idx = ncols++;

  F2Matrix mat(eqs.size(), ncols + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (const auto& m : eqs[i]->monomials()) {
      if (m.is_one()) mat.set(i, ncols, !mat.get(i, ncols));
      else mat.set(i, col_of.at(m), true);
    }
  }
  mat.rref();

  // index of the column carrying each single variable (if present)
  std::vector<int> var_col(total, -1);
  for (const auto& [m, idx] : col_of)
    if (m.degree() == 1) var_col[m.indices()[0]] = int(idx);

  // linear consequences: rows supported on degree<=1 columns only
  std::vector<std::size_t> linear_cols;
  for (const auto& [m, idx] : col_of)
    if (m.degree() == 1) linear_cols.push_back(idx);

  F2Matrix lin(0, total + 1);
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    bool pure_linear = true;
    bool any = false;
    for (const auto& [m, idx] : col_of) {
      if (!mat.get(i, idx)) continue;
      any = true;
      if (m.degree() != 1) { pure_linear = false; break; }
    }
    if (!any) {
      if (mat.get(i, ncols)) {  // 0 = 1
        r.status = SolveStatus::Inconsistent;
        r.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
        return r;
      }
      continue;
    }
    if (!pure_linear) continue;
    lin.append_row();
    std::size_t row = lin.rows() - 1;
    for (const auto& [m, idx] : col_of)
      if (m.degree() == 1 && mat.get(i, idx)) lin.set(row, m.indices()[0], true);
    if (mat.get(i, ncols)) lin.set(row, total, true);
  }

  auto pivots = lin.rref();
  // inconsistent linear row?
  for (std::size_t i = pivots.size(); i < lin.rows(); ++i) {
    if (lin.get(i, total)) {
      r.status = SolveStatus::Inconsistent;
      r.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
      return r;
    }
  }
  for (std::size_t p : pivots)
    require(p < total, Errc::SearchSpaceTooLarge, "pivot on the constant column");

  std::vector<bool> is_pivot(total, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<unsigned> free_vars;
  for (unsigned v = 0; v < total; ++v)
    if (!is_pivot[v]) free_vars.push_back(v);
  require(free_vars.size() <= cfg.max_free_bits, Errc::SearchSpaceTooLarge,
          "affine solution space too large to enumerate");

  for (uint64_t c = 0; c < (uint64_t(1) << free_vars.size()); ++c) {
    BoolMonomial a;
    for (std::size_t i = 0; i < free_vars.size(); ++i)
      if ((c >> i) & 1) a.set(free_vars[i]);
    // back-substitute pivot rows
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      int bit = lin.get(i, total) ? 1 : 0;
      for (unsigned v = 0; v < total; ++v)
        if (v != pivots[i] && lin.get(i, v) && a.test(v)) bit ^= 1;
      if (bit) a.set(unsigned(pivots[i]));
    }
    if (satisfies_all(sys, a)) {
      r.solutions.push_back(a);
      if (!cfg.enumerate_all) break;
    }
  }
  std::sort(r.solutions.begin(), r.solutions.end(),
            [](const BoolMonomial& x, const BoolMonomial& y) {
              return BoolMonomial::cmp(x, y) < 0;
            });
  r.status = r.solutions.empty() ? SolveStatus::Inconsistent : SolveStatus::Solved;
  r.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace pdp
