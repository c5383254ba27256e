#ifndef PDP_BOOLRING_HPP
#define PDP_BOOLRING_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pdp/errors.hpp"

namespace pdp {

/// Squarefree monomial over a universe of at most 256 boolean variables:
/// a plain variable set. Doubles as an assignment bitvector.
struct BoolMonomial {
  std::array<uint64_t, 4> w{0, 0, 0, 0};

  static constexpr unsigned kMaxVars = 256;

  static BoolMonomial one() { return {}; }
  static BoolMonomial single(unsigned idx) {
    BoolMonomial m;
    m.set(idx);
    return m;
  }

  bool test(unsigned idx) const { return (w[idx >> 6] >> (idx & 63)) & 1; }
  void set(unsigned idx) { w[idx >> 6] |= uint64_t(1) << (idx & 63); }
  void clear(unsigned idx) { w[idx >> 6] &= ~(uint64_t(1) << (idx & 63)); }

  int degree() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
           std::popcount(w[3]);
  }
  bool is_one() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }

  BoolMonomial united(const BoolMonomial& o) const {
    return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2], w[3] | o.w[3]}};
  }
  /// Set difference (variables of *this not in o).
  BoolMonomial minus(const BoolMonomial& o) const {
    return {{w[0] & ~o.w[0], w[1] & ~o.w[1], w[2] & ~o.w[2], w[3] & ~o.w[3]}};
  }
  bool contains(const BoolMonomial& o) const {
    return ((o.w[0] & ~w[0]) | (o.w[1] & ~w[1]) | (o.w[2] & ~w[2]) |
            (o.w[3] & ~w[3])) == 0;
  }
  bool intersects(const BoolMonomial& o) const {
    return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
  }

  bool operator==(const BoolMonomial& o) const { return w == o.w; }
  bool operator!=(const BoolMonomial& o) const { return w != o.w; }

  std::vector<unsigned> indices() const;

  /// Grevlex: compare by degree, then the monomial lacking the highest
  /// differing variable is the larger one. Returns <0, 0, >0 like memcmp.
  static int cmp(const BoolMonomial& a, const BoolMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int k = 3; k >= 0; --k) {
      uint64_t d = a.w[k] ^ b.w[k];
      if (d) {
        unsigned bit = 63 - unsigned(std::countl_zero(d));
        return ((a.w[k] >> bit) & 1) ? -1 : 1;
      }
    }
    return 0;
  }
};

struct BoolMonomialGrevlexGreater {
  bool operator()(const BoolMonomial& a, const BoolMonomial& b) const {
    return BoolMonomial::cmp(a, b) > 0;
  }
};

/// Named contiguous index blocks partitioning [0, N): one block per
/// field-level variable, dimension n' for factor-base variables and n for
/// auxiliaries.
class VarUniverse {
 public:
  struct Block {
    std::string name;
    unsigned dim;
    unsigned offset;
  };

  explicit VarUniverse(const std::vector<std::pair<std::string, unsigned>>& blocks);

  unsigned total() const { return total_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(const std::string& name) const;
  bool has_block(const std::string& name) const;
  bool same(const VarUniverse& o) const;
  /// "b<block>_<j>" for documentation headers.
  std::string var_label(unsigned idx) const;

 private:
  std::vector<Block> blocks_;
  unsigned total_ = 0;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

UniversePtr make_universe(const std::vector<std::pair<std::string, unsigned>>& blocks);

/// Multilinear polynomial over F_2 (x^2 = x): a canonical monomial set,
/// stored grevlex-descending so the leading term is monomials().front().
class BoolPoly {
 public:
  BoolPoly() = default;
  explicit BoolPoly(UniversePtr u) : universe_(std::move(u)) {}

  static BoolPoly zero(UniversePtr u) { return BoolPoly(std::move(u)); }
  static BoolPoly one(UniversePtr u);
  static BoolPoly variable(UniversePtr u, unsigned idx);
  /// Takes ownership; monomials must already be sorted descending and unique.
  static BoolPoly from_sorted(UniversePtr u, std::vector<BoolMonomial> monos);
  /// Sorts and cancels duplicate pairs mod 2.
  static BoolPoly from_unsorted(UniversePtr u, std::vector<BoolMonomial> monos);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<BoolMonomial>& monomials() const { return monos_; }
  bool is_zero() const { return monos_.empty(); }
  bool is_one() const { return monos_.size() == 1 && monos_[0].is_one(); }
  std::size_t term_count() const { return monos_.size(); }
  const BoolMonomial& leading() const { return monos_.front(); }

  /// Max monomial degree; -1 is the "degree of zero" sentinel.
  int degree() const { return monos_.empty() ? -1 : monos_.front().degree(); }

  BoolPoly operator+(const BoolPoly& o) const;
  BoolPoly operator*(const BoolPoly& o) const;
  BoolPoly times_monomial(const BoolMonomial& v) const;

  int evaluate(const BoolMonomial& assignment) const;

  bool operator==(const BoolPoly& o) const { return monos_ == o.monos_; }

  /// ANF line like "x3*x7*x12 + x1 + 1" ("0" when zero), grevlex-descending.
  std::string to_anf() const;
  static BoolPoly parse_anf(UniversePtr u, const std::string& line);

 private:
  void check_universe(const BoolPoly& o) const;
  UniversePtr universe_;
  std::vector<BoolMonomial> monos_;
};

/// A descended system plus the bookkeeping the solver needs: which source
/// field equation each boolean equation came from.
struct BoolSystem {
  UniversePtr universe;
  std::vector<BoolPoly> equations;
  std::vector<unsigned> group;

  std::size_t size() const { return equations.size(); }
};

/// ANF file with "#block <name> dim=<d> offset=<o>" header lines.
std::string export_anf(const BoolSystem& sys);
BoolSystem import_anf(const std::string& text);

}  // namespace pdp

#endif
