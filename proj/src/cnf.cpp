#include "pdp/cnf.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace pdp {

namespace {

// Forbid every assignment of vars with XOR != target.
void emit_xor(std::vector<std::vector<int>>& clauses, const std::vector<int>& vars,
              int target) {
  if (vars.empty()) {
    if (target) clauses.push_back({});  // 0 = 1: unsatisfiable
    return;
  }
  unsigned k = unsigned(vars.size());
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if ((std::popcount(mask) & 1) == target) continue;  // satisfying pattern
    std::vector<int> clause;
    clause.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
      bool assigned_true = (mask >> i) & 1;
      clause.push_back(assigned_true ? -vars[i] : vars[i]);
    }
    clauses.push_back(std::move(clause));
  }
}

}  // namespace

CnfFormula to_cnf(const BoolSystem& sys) {
  CnfFormula cnf;
  cnf.original_vars = sys.universe->total();
  cnf.num_vars = int(cnf.original_vars);

  struct MonoLess {
    bool operator()(const BoolMonomial& a, const BoolMonomial& b) const {
      return BoolMonomial::cmp(a, b) < 0;
    }
  };
  std::map<BoolMonomial, int, MonoLess> mono_var;

  auto monomial_literal = [&](const BoolMonomial& m) -> int {
    int d = m.degree();
    if (d == 1) return int(m.indices()[0]) + 1;
    auto it = mono_var.find(m);
    if (it != mono_var.end()) return it->second;
    int a = ++cnf.num_vars;
    mono_var.emplace(m, a);
    cnf.monomial_defs.emplace_back(a, m);
    // a <-> AND of the variables
    std::vector<int> big{a};
    for (unsigned idx : m.indices()) {
      cnf.clauses.push_back({-a, int(idx) + 1});
      big.push_back(-(int(idx) + 1));
    }
    cnf.clauses.push_back(std::move(big));
    return a;
  };

  constexpr unsigned kChunk = 6;
  for (const auto& eq : sys.equations) {
    int target = 0;
    std::vector<int> lits;
    for (const auto& m : eq.monomials()) {
      if (m.is_one()) target ^= 1;
      else lits.push_back(monomial_literal(m));
    }
    // parity chain: t = XOR(first chunk), fold until one chunk remains
    while (lits.size() > kChunk) {
      std::vector<int> chunk(lits.begin(), lits.begin() + (kChunk - 1));
      int t = ++cnf.num_vars;
      chunk.push_back(t);
      emit_xor(cnf.clauses, chunk, 0);  // XOR(chunk vars, t) = 0, i.e. t = XOR(...)
      lits.erase(lits.begin(), lits.begin() + (kChunk - 1));
      lits.insert(lits.begin(), t);
    }
    emit_xor(cnf.clauses, lits, target);
  }
  return cnf;
}

std::string CnfFormula::to_dimacs(const VarUniverse& u) const {
  std::ostringstream os;
  os << "c ANF-to-CNF export\n";
  os << "c universe bit k = DIMACS variable k+1; block layout:\n";
  for (const auto& b : u.blocks())
    os << "c block " << b.name << " dim=" << b.dim << " offset=" << b.offset << "\n";
  for (const auto& [v, m] : monomial_defs) {
    os << "c mono " << v << " =";
    for (unsigned idx : m.indices()) os << " x" << idx;
    os << "\n";
  }
  os << "p cnf " << num_vars << " " << clauses.size() << "\n";
  for (const auto& c : clauses) {
    for (int lit : c) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

}  // namespace pdp
