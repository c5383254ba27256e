#ifndef PDP_SOLVER_HPP
#define PDP_SOLVER_HPP

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "pdp/boolring.hpp"

namespace pdp {

enum class Backend { Groebner, Linearize, Sat };
enum class SolveStatus { Solved, Inconsistent, Timeout, CapExceededIncomplete };

const char* backend_name(Backend b);
Backend parse_backend(const std::string& name);
const char* status_name(SolveStatus s);

struct SolveConfig {
  Backend backend = Backend::Groebner;
  /// S-pairs above this lcm degree are deferred (the reduction-heuristic
  /// analog); must be >= 2 when present.
  std::optional<int> degree_cap;
  /// Compute per-source-equation bases first, then union and recompute.
  bool partial_merge = false;
  double timeout_s = 0;  // 0 = unlimited
  bool enumerate_all = true;
  std::size_t max_linearize_monomials = std::size_t(1) << 20;
  unsigned max_free_bits = 24;  // linearization enumeration guard
  unsigned max_fb_bits = 30;    // extract_solutions guard

  void validate() const {
    require(!degree_cap || *degree_cap >= 2, Errc::Unsupported, "degree_cap must be >= 2");
  }
};

struct SolveReport {
  Backend backend = Backend::Groebner;
  SolveStatus status = SolveStatus::Solved;
  /// Verified assignments over the full universe.
  std::vector<BoolMonomial> solutions;
  /// Max S-pair lcm degree processed (Groebner); max input degree otherwise.
  int max_step_degree = 0;
  uint64_t sp_pairs_processed = 0;
  uint64_t basis_size = 0;
  uint64_t reductions = 0;
  double wall_time_s = 0;
  uint64_t peak_mem_estimate = 0;  // best-effort allocation accounting
};

/// Wall-clock budget passed through the engines.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      enabled_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    }
  }
  bool expired() const {
    return enabled_ && std::chrono::steady_clock::now() >= end_;
  }

 private:
  bool enabled_ = false;
  std::chrono::steady_clock::time_point end_;
};

struct GroebnerResult {
  std::vector<BoolPoly> basis;
  int max_step_degree = 0;
  uint64_t pairs_processed = 0;
  uint64_t reductions = 0;
  uint64_t peak_mem = 0;
  bool deferred_pairs = false;
  bool timed_out = false;
};

/// Buchberger over the boolean quotient ring (squarefree arithmetic), grevlex,
/// normal pair selection, Gebauer-Moeller chain pruning, plus the per-element
/// field pairs the quotient ring requires.
GroebnerResult groebner_basis(const UniversePtr& u, std::vector<BoolPoly> input,
                              const std::optional<int>& degree_cap,
                              const Deadline& deadline);

/// Every verified solution of the system, found by scanning the factor-base
/// prefix (first fb_bits universe bits), filtering through the basis, and
/// back-substitution over the auxiliary bits.
std::vector<BoolMonomial> extract_solutions(const std::vector<BoolPoly>& basis,
                                            const BoolSystem& sys, unsigned fb_bits,
                                            const SolveConfig& cfg);

SolveReport groebner_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg);
SolveReport linearize_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg);
SolveReport sat_solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg);
SolveReport solve(const BoolSystem& sys, unsigned fb_bits, const SolveConfig& cfg);

/// Hard postcondition shared by every backend.
bool satisfies_all(const BoolSystem& sys, const BoolMonomial& assignment);

std::string report_to_json(const SolveReport& r, const BoolSystem& sys);

}  // namespace pdp

#endif
