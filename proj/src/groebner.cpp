#include <algorithm>
#include <set>
#include <unordered_map>

#include "pdp/solver.hpp"

// Buchberger in the boolean quotient ring B = F_2[x_0..x_{N-1}]/(x_i^2 + x_i):
// monomials are variable sets, monomial product is set union. Working in the
// quotient changes two classical facts:
//   * besides the regular S-pairs, every basis element f needs a "field pair"
//     per variable x in lm(f) (the image of spoly(f, x^2+x), which is x*f);
//   * the chain criterion survives (the Moeller syzygy identity is exact with
//     union multiplication), but the coprime-lead product criterion does NOT,
//     so Gebauer-Moeller runs without its product-criterion step.
// Step degree D is the processed pair's lcm degree; a field pair counts as
// deg(lm f) + 1, matching lcm(lm f, x^2) in the polynomial ring upstairs.

namespace pdp {

namespace {

using Monos = std::vector<BoolMonomial>;

constexpr uint32_t kFieldPair = 0xffffffffu;

struct Pair {
  BoolMonomial lcm;
  int deg;
  uint32_t i, j;  // j == kFieldPair marks a field pair on basis element i
  unsigned var;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = BoolMonomial::cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.var < b.var;
  }
};

struct MonoHash {
  std::size_t operator()(const BoolMonomial& m) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : m.w) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return std::size_t(h);
  }
};

bool grevlex_greater(const BoolMonomial& a, const BoolMonomial& b) {
  return BoolMonomial::cmp(a, b) > 0;
}

// Sorts and cancels duplicates mod 2.
void normalize(Monos& v) {
  std::sort(v.begin(), v.end(), grevlex_greater);
  Monos out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) & 1) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

Monos map_times(const Monos& g, const BoolMonomial& v) {
  if (v.is_one()) return g;
  Monos out;
  out.reserve(g.size());
  for (const auto& m : g) out.push_back(m.united(v));
  normalize(out);
  return out;
}

// a[from..] XOR b, both grevlex-descending.
Monos merge_xor(const Monos& a, std::size_t from, const Monos& b) {
  Monos out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = BoolMonomial::cmp(a[i], b[j]);
    if (c > 0) out.push_back(a[i++]);
    else if (c < 0) out.push_back(b[j++]);
    else { ++i; ++j; }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

class Engine {
 public:
  explicit Engine(const UniversePtr& u) : u_(u) {}

  GroebnerResult run(std::vector<BoolPoly> input, const std::optional<int>& cap,
                     const Deadline& deadline) {
    GroebnerResult res;
    // interreduce the input before pairing
    std::vector<Monos> polys;
    for (auto& p : input)
      if (!p.is_zero()) polys.push_back(p.monomials());
    std::sort(polys.begin(), polys.end(), [](const Monos& a, const Monos& b) {
      return BoolMonomial::cmp(a.front(), b.front()) < 0;
    });
    for (auto& p : polys) {
      bool aborted = false;
      Monos nf = normal_form(std::move(p), deadline, aborted);
      if (aborted) { res.timed_out = true; break; }
      if (!nf.empty()) insert(std::move(nf), cap);
    }

    while (!res.timed_out && !queue_.empty()) {
      if (deadline.expired()) { res.timed_out = true; break; }
      Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      ++pairs_processed_;
      max_deg_ = std::max(max_deg_, p.deg);
      Monos spoly;
      if (p.j == kFieldPair) {
        spoly = map_times(basis_[p.i], BoolMonomial::single(p.var));
      } else {
        Monos left = map_times(basis_[p.i], p.lcm.minus(lm_[p.i]));
        Monos right = map_times(basis_[p.j], p.lcm.minus(lm_[p.j]));
        spoly = merge_xor(left, 0, right);
      }
      bool aborted = false;
      Monos nf = normal_form(std::move(spoly), deadline, aborted);
      if (aborted) { res.timed_out = true; break; }
      if (!nf.empty()) insert(std::move(nf), cap);
    }
    res.deferred_pairs = deferred_ > 0;
    if (!res.timed_out) interreduce(deadline, res.timed_out);

    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (!basis_[k].empty()) res.basis.push_back(BoolPoly::from_sorted(u_, basis_[k]));
    std::sort(res.basis.begin(), res.basis.end(), [](const BoolPoly& a, const BoolPoly& b) {
      return BoolMonomial::cmp(a.leading(), b.leading()) < 0;
    });
    res.max_step_degree = max_deg_;
    res.pairs_processed = pairs_processed_;
    res.reductions = reductions_;
    res.peak_mem = peak_mem_;
    return res;
  }

 private:
  int find_reducer(const BoolMonomial& m) const {
    auto it = div_cache_.find(m);
    if (it != div_cache_.end()) return it->second;
    for (std::size_t i = 0; i < lm_.size(); ++i) {
      if (m.contains(lm_[i])) {
        div_cache_.emplace(m, int(i));
        return int(i);
      }
    }
    return -1;
  }

  Monos normal_form(Monos cur, const Deadline& deadline, bool& aborted) {
    Monos out;
    std::size_t from = 0;
    uint64_t steps = 0;
    while (from < cur.size()) {
      if (((++steps) & 1023) == 0 && deadline.expired()) { aborted = true; return out; }
      int r = find_reducer(cur[from]);
      if (r < 0) {
        out.push_back(cur[from]);
        ++from;
        continue;
      }
      ++reductions_;
      Monos mapped = map_times(basis_[std::size_t(r)], cur[from].minus(lm_[std::size_t(r)]));
      cur = merge_xor(cur, from, mapped);
      from = 0;
    }
    return out;
  }

  void insert(Monos h, const std::optional<int>& cap) {
    const uint32_t t = uint32_t(basis_.size());
    const BoolMonomial lmh = h.front();
    // chain criterion against queued pairs
    if (queue_.size() < 200000) {
      for (auto it = queue_.begin(); it != queue_.end();) {
        if (it->j != kFieldPair && it->lcm.contains(lmh) &&
            lm_[it->i].united(lmh) != it->lcm && lm_[it->j].united(lmh) != it->lcm) {
          it = queue_.erase(it);
        } else {
          ++it;
        }
      }
    }
    // new pairs, Gebauer-Moeller style but without the product criterion
    std::vector<Pair> cand;
    cand.reserve(basis_.size());
    for (uint32_t i = 0; i < t; ++i) {
      BoolMonomial L = lm_[i].united(lmh);
      cand.push_back({L, L.degree(), i, t, 0});
    }
    std::sort(cand.begin(), cand.end(), PairLess{});
    std::vector<Pair> kept;
    for (auto& p : cand) {
      bool drop = false;
      for (const auto& q : kept) {
        if (p.lcm.contains(q.lcm)) { drop = true; break; }
      }
      if (drop) continue;
      kept.push_back(p);
    }
    for (auto& p : kept) {
      if (cap && p.deg > *cap) ++deferred_;
      else queue_.insert(p);
    }
    for (unsigned var : lmh.indices()) {
      Pair fp{lmh, lmh.degree() + 1, t, kFieldPair, var};
      if (cap && fp.deg > *cap) ++deferred_;
      else queue_.insert(fp);
    }
    cur_mem_ += h.size() * sizeof(BoolMonomial);
    peak_mem_ = std::max(peak_mem_, cur_mem_ + queue_.size() * sizeof(Pair));
    basis_.push_back(std::move(h));
    lm_.push_back(lmh);
  }

  void interreduce(const Deadline& deadline, bool& timed_out) {
    // tail-reduce every element against the others until stable
    bool changed = true;
    while (changed && !timed_out) {
      changed = false;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (basis_[k].empty()) continue;
        bool aborted = false;
        Monos nf = normal_form_excluding(basis_[k], k, deadline, aborted);
        if (aborted) { timed_out = true; return; }
        if (nf != basis_[k]) {
          changed = true;
          basis_[k] = std::move(nf);
          lm_[k] = basis_[k].empty() ? BoolMonomial::one() : basis_[k].front();
        }
      }
    }
  }

  Monos normal_form_excluding(const Monos& p, std::size_t skip, const Deadline& deadline,
                              bool& aborted) {
    Monos out, cur = p;
    std::size_t from = 0;
    uint64_t steps = 0;
    while (from < cur.size()) {
      if (((++steps) & 1023) == 0 && deadline.expired()) { aborted = true; return p; }
      int r = -1;
      for (std::size_t i = 0; i < lm_.size(); ++i) {
        if (i == skip || basis_[i].empty()) continue;
        if (cur[from].contains(lm_[i])) { r = int(i); break; }
      }
      if (r < 0) {
        out.push_back(cur[from]);
        ++from;
        continue;
      }
      ++reductions_;
      Monos mapped = map_times(basis_[std::size_t(r)], cur[from].minus(lm_[std::size_t(r)]));
      cur = merge_xor(cur, from, mapped);
      from = 0;
    }
    return out;
  }

  UniversePtr u_;
  std::vector<Monos> basis_;
  std::vector<BoolMonomial> lm_;
  std::set<Pair, PairLess> queue_;
  mutable std::unordered_map<BoolMonomial, int, MonoHash> div_cache_;
  uint64_t pairs_processed_ = 0, reductions_ = 0, deferred_ = 0;
  uint64_t cur_mem_ = 0, peak_mem_ = 0;
  int max_deg_ = 0;
};

}  // namespace

GroebnerResult groebner_basis(const UniversePtr& u, std::vector<BoolPoly> input,
                              const std::optional<int>& degree_cap,
                              const Deadline& deadline) {
  Engine e(u);
  return e.run(std::move(input), degree_cap, deadline);
}

}  // namespace pdp
