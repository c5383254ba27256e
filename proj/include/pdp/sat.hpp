#ifndef PDP_SAT_HPP
#define PDP_SAT_HPP

#include <cstdint>
#include <vector>

#include "pdp/solver.hpp"

namespace pdp {

/// Small deterministic CDCL solver: two watched literals, 1UIP learning,
/// activity-driven decisions, phase saving, Luby restarts. Clauses use
/// DIMACS-signed literals. Incremental: add clauses between solve calls
/// (blocking clauses for solution enumeration).
class CdclSolver {
 public:
  enum class Result { Sat, Unsat, Unknown };

  explicit CdclSolver(int num_vars);

  void add_clause(std::vector<int> dimacs_lits);
  Result solve(const Deadline& deadline);
  bool model_value(int dimacs_var) const;  // valid after Sat

  uint64_t conflicts() const { return conflicts_; }

 private:
  struct Clause {
    std::vector<int> lits;  // internal encoding: 2*var + neg
  };

  int value(int lit) const {
    int8_t a = assign_[lit >> 1];
    if (a < 0) return -1;
    return (a ^ (lit & 1)) & 1;  // 1 = true under current assignment
  }
  void enqueue(int lit, int reason);
  int propagate();  // returns conflict clause index or -1
  void analyze(int confl, std::vector<int>& learned, int& bt_level);
  void cancel_until(int level);
  int pick_branch();
  void bump(int var);
  void attach(int ci);

  int nvars_;
  bool unsat_ = false;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int8_t> assign_;   // per var: -1 / 0 (false) / 1 (true)
  std::vector<int8_t> phase_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int8_t> seen_;
  uint64_t conflicts_ = 0;
};

}  // namespace pdp

#endif
