#ifndef PDP_CNF_HPP
#define PDP_CNF_HPP

#include <string>
#include <vector>

#include "pdp/boolring.hpp"

namespace pdp {

/// CNF image of a boolean system. Universe bit k is DIMACS variable k+1;
/// auxiliary variables define nonlinear monomials (AND) and XOR parity chunks.
struct CnfFormula {
  int num_vars = 0;
  unsigned original_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::pair<int, BoolMonomial>> monomial_defs;

  std::string to_dimacs(const VarUniverse& u) const;
};

/// Tseitin-style conversion: one variable per distinct nonlinear monomial,
/// each ANF equation split into parity chunks of width <= 6.
CnfFormula to_cnf(const BoolSystem& sys);

}  // namespace pdp

#endif
