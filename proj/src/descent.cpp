#include "pdp/descent.hpp"

#include <map>

namespace pdp {

namespace {
void check_compatible(const SymbolicFieldElement& a, const SymbolicFieldElement& b) {
  require(a.ctx && b.ctx && a.ctx->same(*b.ctx), Errc::ContextMismatch,
          "symbolic elements over different field contexts");
  require(a.universe && b.universe &&
              (a.universe == b.universe || a.universe->same(*b.universe)),
          Errc::UniverseMismatch, "symbolic elements over different universes");
}
}  // namespace

SymbolicFieldElement symbolic_var(const ContextPtr& ctx, const UniversePtr& u,
                                  const std::string& name) {
  const auto& blk = u->block(name);  // throws UnknownBlock
  require(blk.dim <= ctx->degree(), Errc::DegreeMismatch,
          "block dimension exceeds field degree");
  SymbolicFieldElement e{ctx, u, {}};
  e.coords.assign(ctx->degree(), BoolPoly::zero(u));
  for (unsigned j = 0; j < blk.dim; ++j)
    e.coords[j] = BoolPoly::variable(u, blk.offset + j);
  return e;
}

SymbolicFieldElement embed_constant(const ContextPtr& ctx, const UniversePtr& u,
                                    const FieldElement& c) {
  require(c.context() && ctx->same(*c.context()), Errc::ContextMismatch,
          "constant from a different context");
  SymbolicFieldElement e{ctx, u, {}};
  e.coords.assign(ctx->degree(), BoolPoly::zero(u));
  for (unsigned j = 0; j < ctx->degree(); ++j)
    if ((c.bits() >> j) & 1) e.coords[j] = BoolPoly::one(u);
  return e;
}

SymbolicFieldElement sym_add(const SymbolicFieldElement& a, const SymbolicFieldElement& b) {
  check_compatible(a, b);
  SymbolicFieldElement r{a.ctx, a.universe, {}};
  r.coords.reserve(a.coords.size());
  for (std::size_t k = 0; k < a.coords.size(); ++k)
    r.coords.push_back(a.coords[k] + b.coords[k]);
  return r;
}

SymbolicFieldElement sym_mul(const SymbolicFieldElement& a, const SymbolicFieldElement& b) {
  check_compatible(a, b);
  const unsigned n = a.n();
  std::vector<BoolPoly> conv(2 * n - 1, BoolPoly::zero(a.universe));
  for (unsigned i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b.coords[j].is_zero()) continue;
      conv[i + j] = conv[i + j] + a.coords[i] * b.coords[j];
    }
  }
  SymbolicFieldElement r{a.ctx, a.universe, {}};
  r.coords.assign(conv.begin(), conv.begin() + n);
  const auto& rows = a.ctx->overflow_rows();
  for (unsigned t = n; t < 2 * n - 1; ++t) {
    if (conv[t].is_zero()) continue;
    uint64_t row = rows[t - n];
    while (row) {
      unsigned k = unsigned(std::countr_zero(row));
      row &= row - 1;
      r.coords[k] = r.coords[k] + conv[t];
    }
  }
  return r;
}

SymbolicFieldElement sym_square(const SymbolicFieldElement& a) {
  const unsigned n = a.n();
  SymbolicFieldElement r{a.ctx, a.universe, {}};
  r.coords.assign(n, BoolPoly::zero(a.universe));
  const auto& rows = a.ctx->square_rows();
  for (unsigned j = 0; j < n; ++j) {
    if (a.coords[j].is_zero()) continue;
    uint64_t row = rows[j];
    while (row) {
      unsigned k = unsigned(std::countr_zero(row));
      row &= row - 1;
      // squarefree arithmetic: coords square to themselves
      r.coords[k] = r.coords[k] + a.coords[j];
    }
  }
  return r;
}

SymbolicFieldElement sym_scale(const SymbolicFieldElement& a, const FieldElement& c) {
  require(c.context() && a.ctx->same(*c.context()), Errc::ContextMismatch,
          "constant from a different context");
  const unsigned n = a.n();
  SymbolicFieldElement r{a.ctx, a.universe, {}};
  r.coords.assign(n, BoolPoly::zero(a.universe));
  // c*s^j rows
  for (unsigned j = 0; j < n; ++j) {
    if (a.coords[j].is_zero()) continue;
    uint64_t row = a.ctx->mul_raw(c.bits(), uint64_t(1) << j);
    while (row) {
      unsigned k = unsigned(std::countr_zero(row));
      row &= row - 1;
      r.coords[k] = r.coords[k] + a.coords[j];
    }
  }
  return r;
}

FieldElement sym_evaluate(const SymbolicFieldElement& a, const BoolMonomial& assignment) {
  uint64_t bits = 0;
  for (unsigned k = 0; k < a.n(); ++k)
    if (a.coords[k].evaluate(assignment)) bits |= uint64_t(1) << k;
  return FieldElement(a.ctx, bits);
}

SymbolicFieldElement descend_poly(const ContextPtr& ctx, const UniversePtr& u,
                                  const MvPoly& p) {
  const unsigned n = ctx->degree();
  for (const auto& v : p.vars())
    require(u->has_block(v), Errc::UnregisteredVariable,
            "no boolean block registered for variable '" + v + "'");

  // Frobenius powers of each variable are linear; memoize them, and memoize
  // whole per-variable powers x^e across terms.
  std::map<std::string, std::vector<SymbolicFieldElement>> frob;  // [var][k] = x^{2^k}
  std::map<std::pair<std::string, uint16_t>, SymbolicFieldElement> var_pow;

  auto power_of = [&](const std::string& var, uint16_t e) -> const SymbolicFieldElement& {
    auto key = std::make_pair(var, e);
    auto it = var_pow.find(key);
    if (it != var_pow.end()) return it->second;
    auto& chain = frob[var];
    if (chain.empty()) chain.push_back(symbolic_var(ctx, u, var));
    unsigned need = 0;
    for (uint16_t t = e; t > 1; t >>= 1) ++need;
    while (chain.size() <= need) chain.push_back(sym_square(chain.back()));
    SymbolicFieldElement acc;
    bool have = false;
    for (unsigned k = 0; (e >> k) != 0; ++k) {
      if (!((e >> k) & 1)) continue;
      acc = have ? sym_mul(acc, chain[k]) : chain[k];
      have = true;
    }
    return var_pow.emplace(key, std::move(acc)).first->second;
  };

  SymbolicFieldElement acc{ctx, u, {}};
  acc.coords.assign(n, BoolPoly::zero(u));
  for (const auto& [exps, coef] : p.terms()) {
    SymbolicFieldElement term;
    bool have = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      const auto& pw = power_of(p.vars()[i], exps[i]);
      term = have ? sym_mul(term, pw) : pw;
      have = true;
    }
    if (!have) {
      acc = sym_add(acc, embed_constant(ctx, u, coef));
    } else {
      acc = sym_add(acc, sym_scale(term, coef));
    }
  }
  return acc;
}

BoolSystem descend(const ContextPtr& ctx, const std::vector<MvPoly>& equations,
                   const std::vector<std::pair<std::string, unsigned>>& blocks) {
  BoolSystem sys;
  sys.universe = make_universe(blocks);
  const unsigned n = ctx->degree();
  for (std::size_t e = 0; e < equations.size(); ++e) {
    SymbolicFieldElement d = descend_poly(ctx, sys.universe, equations[e]);
    for (unsigned k = 0; k < n; ++k) {
      sys.equations.push_back(d.coords[k]);
      sys.group.push_back(unsigned(e));
    }
  }
  return sys;
}

FactorBase build_factor_base(const CurveParams& E, unsigned n_prime) {
  require(n_prime >= 1 && n_prime <= E.n(), Errc::DegreeMismatch,
          "need 1 <= n' <= n");
  FactorBase fb;
  fb.dim = n_prime;
  for (uint64_t v = 0; v < (uint64_t(1) << n_prime); ++v)
    for (auto& P : lift_x(E, E.ctx->element(v))) fb.members.push_back(P);
  return fb;
}

}  // namespace pdp
