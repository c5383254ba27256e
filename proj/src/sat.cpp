#include "pdp/sat.hpp"

#include <algorithm>
#include <cmath>

namespace pdp {

namespace {
// Luby sequence for restart scheduling.
uint64_t luby(uint64_t i) {
  uint64_t k = 1;
  while ((uint64_t(1) << k) - 1 < i) ++k;
  while ((uint64_t(1) << k) - 1 != i) {
    i -= (uint64_t(1) << (k - 1)) - 1;
    k = 1;
    while ((uint64_t(1) << k) - 1 < i) ++k;
  }
  return uint64_t(1) << (k - 1);
}
}  // namespace

CdclSolver::CdclSolver(int num_vars)
    : nvars_(num_vars),
      watches_(2 * std::size_t(num_vars)),
      assign_(num_vars, -1),
      phase_(num_vars, 0),
      level_(num_vars, 0),
      reason_(num_vars, -1),
      activity_(num_vars, 0.0),
      seen_(num_vars, 0) {}

void CdclSolver::add_clause(std::vector<int> dimacs_lits) {
  cancel_until(0);
  std::vector<int> lits;
  lits.reserve(dimacs_lits.size());
  for (int dl : dimacs_lits) {
    int var = std::abs(dl) - 1;
    require(var >= 0 && var < nvars_, Errc::ParseError, "literal out of range");
    lits.push_back(2 * var + (dl < 0 ? 1 : 0));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if ((lits[i] ^ lits[i + 1]) == 1) return;  // tautology
  // drop root-level falsified literals, detect satisfied clause
  std::vector<int> kept;
  for (int l : lits) {
    int v = value(l);
    if (v == 1) return;
    if (v == -1) kept.push_back(l);
  }
  if (kept.empty()) {
    unsat_ = true;
    return;
  }
  if (kept.size() == 1) {
    if (value(kept[0]) == 0) { unsat_ = true; return; }
    if (value(kept[0]) == -1) enqueue(kept[0], -1);
    if (propagate() != -1) unsat_ = true;
    return;
  }
  clauses_.push_back({std::move(kept)});
  attach(int(clauses_.size()) - 1);
}

void CdclSolver::attach(int ci) {
  // a clause sits in the watch list of each watched literal and is visited
  // when that literal becomes false
  watches_[clauses_[ci].lits[0]].push_back(ci);
  watches_[clauses_[ci].lits[1]].push_back(ci);
}

void CdclSolver::enqueue(int lit, int reason) {
  int var = lit >> 1;
  assign_[var] = int8_t(1 ^ (lit & 1));
  phase_[var] = assign_[var];
  level_[var] = int(trail_lim_.size());
  reason_[var] = reason;
  trail_.push_back(lit);
}

int CdclSolver::propagate() {
  while (qhead_ < trail_.size()) {
    int lit = trail_[qhead_++];
    int flit = lit ^ 1;
    auto& ws = watches_[flit];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      int ci = ws[i];
      auto& c = clauses_[ci].lits;
      if (c[0] == flit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ci;
        ++i;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) {
        ++i;
        continue;
      }
      ws[j++] = ci;
      ++i;
      if (value(c[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      if (value(c[0]) == -1) enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return -1;
}

void CdclSolver::bump(int var) {
  activity_[var] += var_inc_;
  if (activity_[var] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
}

void CdclSolver::analyze(int confl, std::vector<int>& learned, int& bt_level) {
  learned.clear();
  learned.push_back(0);  // slot for the asserting literal
  int counter = 0;
  int lit = -1;
  std::size_t idx = trail_.size();
  int cur_level = int(trail_lim_.size());
  int ci = confl;
  for (;;) {
    for (int q : clauses_[ci].lits) {
      if (lit != -1 && q == lit) continue;
      int v = q >> 1;
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = 1;
        bump(v);
        if (level_[v] >= cur_level) ++counter;
        else learned.push_back(q ^ 1);
      }
    }
    // pick next trail literal to resolve on
    do { --idx; } while (!seen_[trail_[idx] >> 1]);
    lit = trail_[idx];
    seen_[lit >> 1] = 0;
    --counter;
    if (counter == 0) break;
    ci = reason_[lit >> 1];
  }
  learned[0] = lit ^ 1;
  // backtrack level = max level among tail literals
  bt_level = 0;
  std::size_t max_i = 1;
  for (std::size_t i = 1; i < learned.size(); ++i) {
    if (level_[learned[i] >> 1] > bt_level) {
      bt_level = level_[learned[i] >> 1];
      max_i = i;
    }
  }
  if (learned.size() > 1) std::swap(learned[1], learned[max_i]);
  for (std::size_t i = 1; i < learned.size(); ++i) seen_[learned[i] >> 1] = 0;
  var_inc_ *= 1.05;
}

void CdclSolver::cancel_until(int level) {
  if (int(trail_lim_.size()) <= level) return;
  for (std::size_t k = trail_.size(); k-- > std::size_t(trail_lim_[level]);) {
    int var = trail_[k] >> 1;
    assign_[var] = -1;
    reason_[var] = -1;
  }
  trail_.resize(std::size_t(trail_lim_[level]));
  trail_lim_.resize(std::size_t(level));
  qhead_ = trail_.size();
}

int CdclSolver::pick_branch() {
  int best = -1;
  double best_act = -1.0;
  for (int v = 0; v < nvars_; ++v) {
    if (assign_[v] == -1 && activity_[v] > best_act) {
      best = v;
      best_act = activity_[v];
    }
  }
  if (best < 0) return -1;
  return 2 * best + (phase_[best] ? 0 : 1);
}

CdclSolver::Result CdclSolver::solve(const Deadline& deadline) {
  if (unsat_) return Result::Unsat;
  cancel_until(0);
  if (propagate() != -1) {
    unsat_ = true;
    return Result::Unsat;
  }
  uint64_t restart_idx = 1;
  uint64_t conflict_budget = 64 * luby(restart_idx);
  uint64_t conflicts_here = 0;
  for (;;) {
    int confl = propagate();
    if (confl != -1) {
      ++conflicts_;
      ++conflicts_here;
      if (trail_lim_.empty()) {
        unsat_ = true;
        return Result::Unsat;
      }
      std::vector<int> learned;
      int bt;
      analyze(confl, learned, bt);
      cancel_until(bt);
      if (learned.size() == 1) {
        enqueue(learned[0], -1);
      } else {
        clauses_.push_back({learned});
        attach(int(clauses_.size()) - 1);
        enqueue(learned[0], int(clauses_.size()) - 1);
      }
      if ((conflicts_ & 255) == 0 && deadline.expired()) return Result::Unknown;
      if (conflicts_here >= conflict_budget) {
        ++restart_idx;
        conflict_budget = 64 * luby(restart_idx);
        conflicts_here = 0;
        cancel_until(0);
      }
    } else {
      int next = pick_branch();
      if (next == -1) return Result::Sat;
      trail_lim_.push_back(int(trail_.size()));
      enqueue(next, -1);
    }
  }
}

bool CdclSolver::model_value(int dimacs_var) const {
  return assign_[dimacs_var - 1] == 1;
}

}  // namespace pdp
