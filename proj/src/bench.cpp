#include "pdp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace pdp {

uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

PipelineResult solve_instance(const PdpInstance& inst, VariantTag tag,
                              const SolveConfig& cfg) {
  PipelineResult out;
  SystemVariant variant = build_variant(inst, tag);
  out.system = descend_variant(variant, inst.E.ctx);
  out.report = solve(out.system, variant.fb_bits(), cfg);

  // reconstruct decompositions from the factor-base blocks of each solution
  std::vector<std::vector<std::pair<uint64_t, uint64_t>>> seen;
  for (const auto& sol : out.report.solutions) {
    std::vector<FieldElement> xs;
    for (int i = 0; i < inst.m; ++i) {
      const auto& blk = out.system.universe->blocks()[std::size_t(i)];
      uint64_t bits = 0;
      for (unsigned k = 0; k < blk.dim; ++k)
        if (sol.test(blk.offset + k)) bits |= uint64_t(1) << k;
      xs.push_back(inst.E.ctx->element(bits));
    }
    auto pts = points_from_x(inst.E, inst.R, xs);
    if (!pts) continue;
    if (!verify_decomposition(inst, *pts)) continue;
    std::vector<std::pair<uint64_t, uint64_t>> key;
    for (const auto& P : *pts) key.emplace_back(P.x.bits(), P.y.bits());
    std::sort(key.begin(), key.end());
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.decompositions.push_back(*pts);
  }
  return out;
}

std::vector<std::vector<Point>> brute_force_pdp(const PdpInstance& inst,
                                                const FactorBase* fb) {
  FactorBase local;
  if (!fb) {
    local = build_factor_base(inst.E, inst.n_prime);
    fb = &local;
  }
  const auto& mem = fb->members;
  require(!mem.empty(), Errc::EmptyFactorBase, "factor base is empty");
  double space = std::pow(double(mem.size()), double(inst.m));
  require(space <= double(uint64_t(1) << 26), Errc::TooLarge,
          "|FB|^m exceeds the oracle guard");

  std::vector<std::vector<Point>> found;
  std::vector<std::size_t> idx(std::size_t(inst.m), 0);
  std::vector<Point> partial(std::size_t(inst.m) + 1, Point::make_infinity());
  // multisets: nondecreasing index tuples, running prefix sums
  std::size_t depth = 0;
  for (;;) {
    if (depth == std::size_t(inst.m)) {
      if (partial[depth] == inst.R) {
        std::vector<Point> d;
        for (std::size_t k = 0; k < std::size_t(inst.m); ++k) d.push_back(mem[idx[k]]);
        found.push_back(std::move(d));
      }
      // backtrack/advance
      for (;;) {
        if (depth == 0) return found;
        --depth;
        if (++idx[depth] < mem.size()) break;
      }
      continue;
    }
    if (idx[depth] >= mem.size()) {
      for (;;) {
        if (depth == 0) return found;
        --depth;
        if (++idx[depth] < mem.size()) break;
      }
      continue;
    }
    partial[depth + 1] = add(inst.E, partial[depth], mem[idx[depth]]);
    ++depth;
    if (depth < std::size_t(inst.m)) idx[depth] = idx[depth - 1];
  }
}

namespace {

BenchRow run_cell(const BenchCell& cell, unsigned trials, uint64_t seed,
                  double timeout_s) {
  BenchRow row;
  row.cell = cell;
  row.trials = trials;
  unsigned n_prime = cell.n_prime ? cell.n_prime : unsigned(cell.n) / unsigned(cell.m);
  row.cell.n_prime = n_prime;
  for (unsigned t = 0; t < trials; ++t) {
    try {
      uint64_t s = mix_seed(seed, uint64_t(cell.n) * 131 + uint64_t(cell.m), t);
      ContextPtr ctx = FieldContext::make(cell.n);
      CurveParams E = random_curve(ctx, s);
      FactorBase fb = build_factor_base(E, n_prime);
      for (unsigned retry = 1; fb.members.empty() && retry < 64; ++retry) {
        E = random_curve(ctx, mix_seed(s, 0xE, retry));
        fb = build_factor_base(E, n_prime);
      }
      PdpInstance inst =
          generate_instance(E, cell.m, n_prime, InstanceMode::Planted, mix_seed(s, 1, t), &fb);
      SolveConfig cfg;
      cfg.backend = cell.backend;
      cfg.degree_cap = cell.degree_cap;
      cfg.partial_merge = cell.partial_merge;
      cfg.timeout_s = timeout_s;
      PipelineResult res = solve_instance(inst, cell.variant, cfg);
      row.max_time_s = std::max(row.max_time_s, res.report.wall_time_s);
      row.max_D = std::max(row.max_D, res.report.max_step_degree);
      switch (res.report.status) {
        case SolveStatus::Solved:
          if (!res.decompositions.empty()) ++row.solved;
          else ++row.error;  // solved the system but nothing lifted rationally
          break;
        case SolveStatus::Inconsistent: ++row.no_solution; break;
        case SolveStatus::Timeout: ++row.timeout; break;
        case SolveStatus::CapExceededIncomplete: ++row.incomplete; break;
      }
    } catch (const Error&) {
      ++row.error;
    }
  }
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchCell>& cells, unsigned trials,
                                uint64_t seed, unsigned jobs, double timeout_s) {
  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::min(jobs, unsigned(cells.size())));
  auto work = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= cells.size()) return;
      rows[k] = run_cell(cells[k], trials, mix_seed(seed, k, 0), timeout_s);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "# pdp-bench-csv v1\n";
  os << "n,m,n_prime,variant,backend,trials,max_time_s,max_D,solved,no_solution,"
        "timeout,incomplete,error\n";
  for (const auto& r : rows) {
    os << r.cell.n << "," << r.cell.m << "," << r.cell.n_prime << ","
       << variant_name(r.cell.variant) << "," << backend_name(r.cell.backend) << ","
       << r.trials << "," << r.max_time_s << "," << r.max_D << "," << r.solved << ","
       << r.no_solution << "," << r.timeout << "," << r.incomplete << "," << r.error
       << "\n";
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["n"] = r.cell.n;
    j["m"] = r.cell.m;
    j["n_prime"] = r.cell.n_prime;
    j["variant"] = variant_name(r.cell.variant);
    j["backend"] = backend_name(r.cell.backend);
    if (r.cell.degree_cap) j["degree_cap"] = *r.cell.degree_cap;
    j["partial_merge"] = r.cell.partial_merge;
    j["trials"] = r.trials;
    j["max_time_s"] = r.max_time_s;
    j["max_D"] = r.max_D;
    j["solved"] = r.solved;
    j["no_solution"] = r.no_solution;
    j["timeout"] = r.timeout;
    j["incomplete"] = r.incomplete;
    j["error"] = r.error;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace pdp
