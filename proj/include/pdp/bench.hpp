#ifndef PDP_BENCH_HPP
#define PDP_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdp/solver.hpp"
#include "pdp/systems.hpp"

namespace pdp {

/// Instance-level solve: build the variant, descend, run the backend, and
/// reconstruct curve points from every boolean solution. Solutions whose
/// x-values only lift over the quadratic extension are kept in the report but
/// contribute no decomposition.
struct PipelineResult {
  SolveReport report;
  BoolSystem system;
  std::vector<std::vector<Point>> decompositions;  // verified: sum = R, x in V
};

PipelineResult solve_instance(const PdpInstance& inst, VariantTag tag,
                              const SolveConfig& cfg);

/// Ground-truth oracle: all unordered m-multisets of factor-base points
/// summing to R. Guarded to |FB|^m <= 2^26.
std::vector<std::vector<Point>> brute_force_pdp(const PdpInstance& inst,
                                                const FactorBase* fb = nullptr);

struct BenchCell {
  unsigned n = 0;
  int m = 0;
  unsigned n_prime = 0;  // 0 = floor(n/m)
  VariantTag variant = VariantTag::Split2;
  Backend backend = Backend::Groebner;
  std::optional<int> degree_cap;
  bool partial_merge = false;
};

struct BenchRow {
  BenchCell cell;
  unsigned trials = 0;
  double max_time_s = 0;  // max over trials, as in the experiment tables
  int max_D = 0;
  unsigned solved = 0;       // Solved with a verified decomposition
  unsigned no_solution = 0;  // Inconsistent
  unsigned timeout = 0;
  unsigned incomplete = 0;  // CapExceededIncomplete
  unsigned error = 0;
};

/// Planted instances on fresh random curves, deterministic under the seed;
/// cells run on a worker pool, trials within a cell stay sequential.
std::vector<BenchRow> run_bench(const std::vector<BenchCell>& cells, unsigned trials,
                                uint64_t seed, unsigned jobs, double timeout_s);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b);

}  // namespace pdp

#endif
