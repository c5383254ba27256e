#ifndef PDP_GF2N_HPP
#define PDP_GF2N_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdp/errors.hpp"

namespace pdp {

class FieldElement;
class FieldContext;
using ContextPtr = std::shared_ptr<const FieldContext>;

/// F_{2^n} = F_2[s]/<f(s)> in polynomial basis, 2 <= n <= 64.
///
/// Elements are coefficient bitsets packed into a uint64_t (bit j = coefficient
/// of s^j). The modulus is stored as its tail f - s^n, so n = 64 needs no 65th
/// bit. Irreducibility of f is verified at construction: s^{2^n} = s mod f plus
/// gcd(s^{2^{n/p}} - s, f) = 1 at every prime p | n.
///
/// The context owns the reduction tables shared by field multiplication and by
/// the symbolic (Weil descent) arithmetic, plus a precomputed solver for
/// z^2 + z = c, which lift_x needs for even n.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  /// Context with the given modulus; omit the modulus to get the canonical one
  /// (smallest irreducible as a coefficient bitset, deterministic across runs).
  /// `full_modulus` carries all n+1 coefficient bits, so it requires n <= 63;
  /// use make_with_tail for n = 64.
  static ContextPtr make(unsigned n);
  static ContextPtr make(unsigned n, uint64_t full_modulus);
  static ContextPtr make_with_tail(unsigned n, uint64_t tail);

  unsigned degree() const { return n_; }
  uint64_t modulus_tail() const { return tail_; }
  uint64_t mask() const { return mask_; }
  std::string modulus_string() const;

  bool same(const FieldContext& other) const {
    return n_ == other.n_ && tail_ == other.tail_;
  }

  // Raw kernels on coefficient bitsets. add is XOR; callers hold the bits.
  uint64_t mul_raw(uint64_t a, uint64_t b) const;
  uint64_t square_raw(uint64_t a) const;
  uint64_t inv_raw(uint64_t a) const;
  uint64_t pow_raw(uint64_t a, uint64_t k) const;
  int trace_raw(uint64_t a) const;
  uint64_t half_trace_raw(uint64_t a) const;
  uint64_t sqrt_raw(uint64_t a) const;
  /// Solutions of z^2 + z = c form {z, z+1}; returns one of them, or nothing
  /// when trace(c) = 1. Valid for every n (linear-algebra solver, precomputed).
  std::optional<uint64_t> solve_quadratic_raw(uint64_t c) const;

  FieldElement element(uint64_t bits) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement sigma() const;
  FieldElement from_hex(const std::string& hex) const;
  FieldElement random_element(uint64_t seed) const;
  FieldElement random_element(std::mt19937_64& rng) const;

  /// s^{n+t} mod f for t = 0 .. n-2: the rewrite rows shared with the descent.
  const std::vector<uint64_t>& overflow_rows() const { return overflow_rows_; }
  /// s^{2j} mod f for j = 0 .. n-1.
  const std::vector<uint64_t>& square_rows() const { return square_rows_; }

 private:
  FieldContext(unsigned n, uint64_t tail);
  void build_tables();
  void build_quadratic_solver();

  unsigned n_;
  uint64_t tail_;
  uint64_t mask_;
  std::vector<uint64_t> overflow_rows_;
  std::vector<uint64_t> square_rows_;
  // z^2+z = c solver: row-reduced transform E, pivot column per pivot row,
  // and the rows of E whose image row vanished (consistency checks).
  std::vector<uint64_t> qs_transform_;
  std::vector<int> qs_pivot_;
  std::vector<uint64_t> qs_check_rows_;
};

/// Immutable element of one FieldContext. Mixing contexts throws ContextMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(ContextPtr ctx, uint64_t bits) : ctx_(std::move(ctx)), bits_(bits) {}

  uint64_t bits() const { return bits_; }
  const ContextPtr& context() const { return ctx_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    return FieldElement(ctx_, bits_ ^ o.bits_);
  }
  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    return FieldElement(ctx_, ctx_->mul_raw(bits_, o.bits_));
  }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  bool operator==(const FieldElement& o) const {
    return bits_ == o.bits_ && (!ctx_ || !o.ctx_ || ctx_->same(*o.ctx_));
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const { return FieldElement(ctx_, ctx_->inv_raw(bits_)); }
  FieldElement pow(uint64_t k) const { return FieldElement(ctx_, ctx_->pow_raw(bits_, k)); }
  FieldElement square() const { return FieldElement(ctx_, ctx_->square_raw(bits_)); }
  FieldElement sqrt() const { return FieldElement(ctx_, ctx_->sqrt_raw(bits_)); }
  int trace() const { return ctx_->trace_raw(bits_); }
  FieldElement half_trace() const { return FieldElement(ctx_, ctx_->half_trace_raw(bits_)); }

  /// Little-endian-bit hex encoding: bit 0 is the constant term.
  std::string to_hex() const;

 private:
  void check_same(const FieldElement& o) const {
    require(ctx_ && o.ctx_ && ctx_->same(*o.ctx_), Errc::ContextMismatch,
            "elements from different field contexts");
  }
  ContextPtr ctx_;
  uint64_t bits_ = 0;
};

/// Spec-level entry point; modulus is the full n+1-bit coefficient set.
ContextPtr make_context(unsigned n, std::optional<uint64_t> modulus = std::nullopt);

/// Tail of the canonical modulus for degree n (exposed for tests and tools).
uint64_t default_modulus_tail(unsigned n);

/// "s^4+s+1" style rendering/parsing of a modulus.
std::string modulus_to_string(unsigned n, uint64_t tail);
std::pair<unsigned, uint64_t> parse_modulus_string(const std::string& text);

uint64_t parse_hex_bits(const std::string& hex);
std::string bits_to_hex(uint64_t bits);

}  // namespace pdp

#endif
