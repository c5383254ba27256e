#include "pdp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pdp/cnf.hpp"
#include "pdp/gf2n.hpp"
#include "pdp/sat.hpp"

namespace pdp {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Groebner: return "groebner";
    case Backend::Linearize: return "linearize";
    case Backend::Sat: return "sat";
  }
  return "?";
}

Backend parse_backend(const std::string& name) {
  if (name == "groebner") return Backend::Groebner;
  if (name == "linearize") return Backend::Linearize;
  if (name == "sat") return Backend::Sat;
  fail(Errc::ParseError, "unknown backend '" + name + "'");
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "Solved";
    case SolveStatus::Inconsistent: return "Inconsistent";
    case SolveStatus::Timeout: return "Timeout";
    case SolveStatus::CapExceededIncomplete: return "CapExceededIncomplete";
  }
  return "?";
}

bool satisfies_all(const BoolSystem& sys, const BoolMonomial& assignment) {
  for (const auto& eq : sys.equations)
    if (eq.evaluate(assignment) != 0) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BoolMonomial prefix_mask(unsigned bits) {
  BoolMonomial m;
  for (unsigned k = 0; k < bits; ++k) m.set(k);
  return m;
}

bool all_equations_zero(const BoolSystem& sys) {
  for (const auto& eq : sys.equations)
    if (!eq.is_zero()) return false;
  return true;
}

/// p with the factor-base prefix bound to `assign`; the result ranges over
/// auxiliary variables only.
BoolPoly substitute_prefix(const BoolPoly& p, const BoolMonomial& assign,
                           const BoolMonomial& fb_mask) {
  std::vector<BoolMonomial> kept;
  for (const auto& m : p.monomials()) {
    BoolMonomial fb_part = m.minus(m.minus(fb_mask));  // m & fb_mask
    if (!assign.contains(fb_part)) continue;
    kept.push_back(m.minus(fb_mask));
  }
  return BoolPoly::from_unsorted(p.universe(), std::move(kept));
}

BoolPoly substitute_var(const BoolPoly& p, unsigned idx, bool val) {
  std::vector<BoolMonomial> kept;
  for (const auto& m : p.monomials()) {
    if (!m.test(idx)) {
      kept.push_back(m);
      continue;
    }
    if (!val) continue;  // monomial vanishes
    BoolMonomial r = m;
    r.clear(idx);
    kept.push_back(r);
  }
  return BoolPoly::from_unsorted(p.universe(), std::move(kept));
}

struct AuxSearch {
  const BoolSystem& sys;
  unsigned total;
  bool enumerate_all;
  uint64_t budget = uint64_t(1) << 22;
  std::vector<BoolMonomial>* out;
  bool done = false;  // found one and enumerate_all is off

  // polys: aux-only residual system; assign: fb bits + decided aux bits;
  // decided: mask of all decided variables.
  void run(std::vector<BoolPoly> polys, BoolMonomial assign, BoolMonomial decided) {
    if (done) return;
    require(budget-- > 0, Errc::SearchSpaceTooLarge, "auxiliary search budget exhausted");
    // unit propagation
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& p : polys) {
        if (p.is_zero()) continue;
        if (p.is_one()) return;  // contradiction
        if (p.term_count() == 1 && p.monomials()[0].degree() == 1) {
          unsigned v = p.monomials()[0].indices()[0];
          decided.set(v);
          for (auto& q : polys) q = substitute_var(q, v, false);
          changed = true;
          break;
        }
        if (p.term_count() == 2 && p.degree() == 1 && p.monomials()[1].is_one()) {
          unsigned v = p.monomials()[0].indices()[0];
          decided.set(v);
          assign.set(v);
          for (auto& q : polys) q = substitute_var(q, v, true);
          changed = true;
          break;
        }
      }
    }
    // pick the lowest variable still occurring
    int branch = -1;
    for (const auto& p : polys) {
      for (const auto& m : p.monomials())
        for (unsigned idx : m.indices())
          if (branch < 0 || int(idx) < branch) branch = int(idx);
      if (branch >= 0) break;
    }
    if (branch < 0) {
      // no constraints left: any undecided variable is free
      std::vector<unsigned> free_vars;
      for (unsigned v = 0; v < total; ++v)
        if (!decided.test(v)) free_vars.push_back(v);
      require(free_vars.size() <= 12, Errc::SearchSpaceTooLarge,
              "too many unconstrained variables to enumerate");
      for (uint64_t c = 0; c < (uint64_t(1) << free_vars.size()); ++c) {
        BoolMonomial full = assign;
        for (std::size_t i = 0; i < free_vars.size(); ++i)
          if ((c >> i) & 1) full.set(free_vars[i]);
        if (satisfies_all(sys, full)) {
          out->push_back(full);
          if (!enumerate_all) { done = true; return; }
        }
      }
      return;
    }
    for (int val = 0; val <= 1 && !done; ++val) {
      std::vector<BoolPoly> next;
      next.reserve(polys.size());
      bool dead = false;
      for (const auto& p : polys) {
        BoolPoly q = substitute_var(p, unsigned(branch), val != 0);
        if (q.is_one()) { dead = true; break; }
        if (!q.is_zero()) next.push_back(std::move(q));
      }
      if (dead) continue;
      BoolMonomial a2 = assign;
      BoolMonomial d2 = decided;
      d2.set(unsigned(branch));
      if (val) a2.set(unsigned(branch));
      run(std::move(next), a2, d2);
    }
  }
};

}  // namespace

std::vector<BoolMonomial> extract_solutions(const std::vector<BoolPoly>& basis,
                                            const BoolSystem& sys, unsigned fb_bits,
                                            const SolveConfig& cfg) {
  require(fb_bits <= cfg.max_fb_bits, Errc::SearchSpaceTooLarge,
          "factor-base assignment space exceeds the guard");
  const unsigned total = sys.universe->total();
  const BoolMonomial fb_mask = prefix_mask(fb_bits);

  std::vector<const BoolPoly*> fb_only, mixed;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    bool pure = true;
    for (const auto& m : g.monomials())
      if (!fb_mask.contains(m)) { pure = false; break; }
    (pure ? fb_only : mixed).push_back(&g);
  }
  std::stable_sort(fb_only.begin(), fb_only.end(),
                   [](const BoolPoly* a, const BoolPoly* b) {
                     return a->term_count() < b->term_count();
                   });

  std::vector<BoolMonomial> solutions;
  for (uint64_t cand = 0; cand < (uint64_t(1) << fb_bits); ++cand) {
    BoolMonomial assign;
    for (unsigned k = 0; k < fb_bits; ++k)
      if ((cand >> k) & 1) assign.set(k);
    bool ok = true;
    for (const BoolPoly* g : fb_only)
      if (g->evaluate(assign) != 0) { ok = false; break; }
    if (!ok) continue;

    std::vector<BoolPoly> aux;
    bool dead = false;
    for (const BoolPoly* g : mixed) {
      BoolPoly q = substitute_prefix(*g, assign, fb_mask);
      if (q.is_one()) { dead = true; break; }
      if (!q.is_zero()) aux.push_back(std::move(q));
    }
    if (dead) continue;

    BoolMonomial decided = fb_mask;
    AuxSearch search{sys, total, cfg.enumerate_all, uint64_t(1) << 22, &solutions, false};
    search.run(std::move(aux), assign, decided);
    if (!cfg.enumerate_all && !solutions.empty()) break;
  }
  std::sort(solutions.begin(), solutions.end(),
            [](const BoolMonomial& a, const BoolMonomial& b) {
              return BoolMonomial::cmp(a, b) < 0;
            });
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  return solutions;
}

SolveReport groebner_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  Deadline dl(cfg.timeout_s);
  SolveReport r;
  r.backend = Backend::Groebner;
  if (all_equations_zero(sys)) {
    r.status = SolveStatus::Solved;
    r.solutions.push_back(BoolMonomial::one());
    r.wall_time_s = seconds_since(t0);
    return r;
  }

  GroebnerResult g;
  bool timed_out = false;
  if (cfg.partial_merge) {
    std::map<unsigned, std::vector<BoolPoly>> groups;
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
      groups[i < sys.group.size() ? sys.group[i] : 0].push_back(sys.equations[i]);
    std::vector<BoolPoly> merged;
    bool deferred = false;
    for (auto& [gi, polys] : groups) {
      GroebnerResult part = groebner_basis(sys.universe, polys, cfg.degree_cap, dl);
      r.sp_pairs_processed += part.pairs_processed;
      r.reductions += part.reductions;
      r.max_step_degree = std::max(r.max_step_degree, part.max_step_degree);
      r.peak_mem_estimate = std::max(r.peak_mem_estimate, part.peak_mem);
      deferred = deferred || part.deferred_pairs;
      if (part.timed_out) { timed_out = true; break; }
      for (auto& b : part.basis) merged.push_back(std::move(b));
    }
    if (!timed_out) {
      g = groebner_basis(sys.universe, merged, cfg.degree_cap, dl);
      g.deferred_pairs = g.deferred_pairs || deferred;
    }
  } else {
    g = groebner_basis(sys.universe, sys.equations, cfg.degree_cap, dl);
  }
  timed_out = timed_out || g.timed_out;
  r.sp_pairs_processed += g.pairs_processed;
  r.reductions += g.reductions;
  r.max_step_degree = std::max(r.max_step_degree, g.max_step_degree);
  r.peak_mem_estimate = std::max(r.peak_mem_estimate, g.peak_mem);
  r.basis_size = g.basis.size();
  if (timed_out) {
    r.status = SolveStatus::Timeout;
    r.wall_time_s = seconds_since(t0);
    return r;
  }

  bool has_one = false;
  for (const auto& b : g.basis)
    if (b.is_one()) { has_one = true; break; }
  if (has_one) {
    r.status = SolveStatus::Inconsistent;
  } else {
    r.solutions = extract_solutions(g.basis, sys, fb_bits, cfg);
    for (const auto& s : r.solutions)
      require(satisfies_all(sys, s), Errc::SearchSpaceTooLarge,
              "internal error: unverified solution escaped extraction");
    if (!r.solutions.empty()) r.status = SolveStatus::Solved;
    else r.status = g.deferred_pairs ? SolveStatus::CapExceededIncomplete
                                     : SolveStatus::Inconsistent;
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

SolveReport sat_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg) {
  (void)fb_bits;
  cfg.validate();
  auto t0 = Clock::now();
  Deadline dl(cfg.timeout_s);
  SolveReport r;
  r.backend = Backend::Sat;
  for (const auto& eq : sys.equations)
    r.max_step_degree = std::max(r.max_step_degree, eq.degree());
  if (all_equations_zero(sys)) {
    r.status = SolveStatus::Solved;
    r.solutions.push_back(BoolMonomial::one());
    r.wall_time_s = seconds_since(t0);
    return r;
  }

  CnfFormula cnf = to_cnf(sys);
  CdclSolver solver(cnf.num_vars);
  bool direct_unsat = false;
  for (const auto& c : cnf.clauses) {
    if (c.empty()) { direct_unsat = true; break; }
    solver.add_clause(c);
  }
  const unsigned orig = cnf.original_vars;
  bool timed_out = false;
  while (!direct_unsat) {
    auto res = solver.solve(dl);
    if (res == CdclSolver::Result::Unknown) { timed_out = true; break; }
    if (res == CdclSolver::Result::Unsat) break;
    BoolMonomial sol;
    for (unsigned v = 0; v < orig; ++v)
      if (solver.model_value(int(v) + 1)) sol.set(v);
    require(satisfies_all(sys, sol), Errc::SearchSpaceTooLarge,
            "internal error: SAT model fails the ANF system");
    r.solutions.push_back(sol);
    require(r.solutions.size() <= (std::size_t(1) << 20), Errc::SearchSpaceTooLarge,
            "solution enumeration exceeds guard");
    if (!cfg.enumerate_all) break;
    std::vector<int> block;
    block.reserve(orig);
    for (unsigned v = 0; v < orig; ++v)
      block.push_back(sol.test(v) ? -(int(v) + 1) : int(v) + 1);
    solver.add_clause(std::move(block));
  }
  std::sort(r.solutions.begin(), r.solutions.end(),
            [](const BoolMonomial& a, const BoolMonomial& b) {
              return BoolMonomial::cmp(a, b) < 0;
            });
  if (timed_out && r.solutions.empty()) r.status = SolveStatus::Timeout;
  else if (!r.solutions.empty()) r.status = SolveStatus::Solved;
  else r.status = SolveStatus::Inconsistent;
  r.wall_time_s = seconds_since(t0);
  return r;
}

SolveReport solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg) {
  switch (cfg.backend) {
    case Backend::Groebner: return groebner_solve(sys, fb_bits, cfg);
    case Backend::Linearize: return linearize_solve(sys, fb_bits, cfg);
    case Backend::Sat: return sat_solve(sys, fb_bits, cfg);
  }
  fail(Errc::Unsupported, "unknown backend");
}

std::string report_to_json(const SolveReport& r, const BoolSystem& sys) {
  nlohmann::json j;
  j["backend"] = backend_name(r.backend);
  j["status"] = status_name(r.status);
  j["max_step_degree"] = r.max_step_degree;
  j["sp_pairs_processed"] = r.sp_pairs_processed;
  j["basis_size"] = r.basis_size;
  j["reductions"] = r.reductions;
  j["wall_time_s"] = r.wall_time_s;
  j["peak_mem_estimate_bytes"] = r.peak_mem_estimate;
  j["solution_count"] = r.solutions.size();
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& s : r.solutions) {
    nlohmann::json one;
    for (const auto& b : sys.universe->blocks()) {
      uint64_t bits = 0;
      for (unsigned k = 0; k < b.dim; ++k)
        if (s.test(b.offset + k)) bits |= uint64_t(1) << k;
      one[b.name] = bits_to_hex(bits);
    }
    sols.push_back(one);
  }
  j["solutions"] = sols;
  return j.dump(2);
}

}  // namespace pdp
