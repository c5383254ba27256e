#include "pdp/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "pdp/f2linalg.hpp"

namespace pdp {

namespace {

using u128 = unsigned __int128;

int poly_deg(uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

// a mod b over F_2[x], both packed, b != 0.
uint64_t poly_mod(uint64_t a, uint64_t b) {
  int db = poly_deg(b);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) a ^= b << (da - db);
  return a;
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

// Square of `a` modulo f = x^n + tail, no precomputed tables (used while
// validating a candidate modulus).
uint64_t sqmod_slow(uint64_t a, unsigned n, uint64_t tail) {
  u128 sq = 0;
  for (unsigned j = 0; j < n; ++j)
    if ((a >> j) & 1) sq ^= u128(1) << (2 * j);
  for (int t = 2 * int(n) - 2; t >= int(n); --t) {
    if ((sq >> t) & 1) {
      sq ^= u128(1) << t;
      sq ^= u128(tail) << (t - n);
    }
  }
  return uint64_t(sq);
}

// x^n mod h for deg(h) <= n, h != const; avoids materializing x^n itself.
uint64_t xn_mod(unsigned n, uint64_t h) {
  int dh = poly_deg(h);
  uint64_t t = 1;
  for (unsigned i = 0; i < n; ++i) {
    t <<= 1;
    if (poly_deg(t) == dh) t ^= h;
  }
  return t;
}

bool is_irreducible(unsigned n, uint64_t tail) {
  if (n < 1) return false;
  if ((tail & 1) == 0) return false;  // x divides f
  // s^{2^n} = s mod f
  uint64_t s = 2;  // the polynomial x
  std::vector<uint64_t> frob;  // s^{2^k} mod f, k = 1..n
  for (unsigned k = 0; k < n; ++k) {
    s = sqmod_slow(s, n, tail);
    frob.push_back(s);
  }
  if (frob.back() != 2) return false;
  // gcd(s^{2^{n/p}} - s, f) = 1 at proper divisors
  for (unsigned p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) { prime = false; break; }
    if (!prime) continue;
    uint64_t h = frob[n / p - 1] ^ 2;
    if (h == 0) return false;
    uint64_t f_mod_h = xn_mod(n, h) ^ poly_mod(tail, h);
    if (poly_gcd(h, f_mod_h) != 1) return false;
  }
  return true;
}

}  // namespace

uint64_t default_modulus_tail(unsigned n) {
  require(n >= 2 && n <= 64, Errc::DegreeMismatch, "extension degree must be in [2,64]");
  for (uint64_t tail = 1;; tail += 2) {
    if (n < 64 && tail >= (uint64_t(1) << n)) break;
    if (is_irreducible(n, tail)) return tail;
    if (tail == UINT64_MAX) break;
  }
  fail(Errc::NotIrreducible, "no irreducible modulus found (unreachable)");
}

FieldContext::FieldContext(unsigned n, uint64_t tail)
    : n_(n), tail_(tail), mask_(n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1) {
  require(n >= 2 && n <= 64, Errc::DegreeMismatch, "extension degree must be in [2,64]");
  require((tail & ~mask_) == 0, Errc::DegreeMismatch, "modulus tail has bits at degree >= n");
  require(is_irreducible(n, tail), Errc::NotIrreducible,
          "modulus " + modulus_to_string(n, tail) + " is not irreducible");
  build_tables();
  build_quadratic_solver();
}

ContextPtr FieldContext::make_with_tail(unsigned n, uint64_t tail) {
  return ContextPtr(new FieldContext(n, tail));
}

ContextPtr FieldContext::make(unsigned n) { return make_with_tail(n, default_modulus_tail(n)); }

ContextPtr FieldContext::make(unsigned n, uint64_t full_modulus) {
  require(n >= 2 && n <= 63, Errc::DegreeMismatch,
          "full modulus encoding needs n <= 63; use make_with_tail for n = 64");
  require((full_modulus >> n) == 1, Errc::DegreeMismatch,
          "modulus must be monic of exact degree n");
  return make_with_tail(n, full_modulus & ((uint64_t(1) << n) - 1));
}

ContextPtr make_context(unsigned n, std::optional<uint64_t> modulus) {
  return modulus ? FieldContext::make(n, *modulus) : FieldContext::make(n);
}

void FieldContext::build_tables() {
  overflow_rows_.resize(n_ > 1 ? n_ - 1 : 0);
  uint64_t r = tail_;  // s^n mod f
  for (unsigned t = 0; t + 1 < n_; ++t) {
    overflow_rows_[t] = r;
    uint64_t top = (r >> (n_ - 1)) & 1;
    r = (r << 1) & mask_;
    if (top) r ^= tail_;
  }
  square_rows_.resize(n_);
  uint64_t s = 1;  // s^{2j} mod f
  for (unsigned j = 0; j < n_; ++j) {
    square_rows_[j] = s;
    for (int step = 0; step < 2; ++step) {
      uint64_t top = (s >> (n_ - 1)) & 1;
      s = (s << 1) & mask_;
      if (top) s ^= tail_;
    }
  }
}

void FieldContext::build_quadratic_solver() {
  // Solve M z = c where column j of M is (s^j)^2 + s^j.
  F2Matrix aug(n_, 2 * n_);
  for (unsigned j = 0; j < n_; ++j) {
    uint64_t col = square_rows_[j] ^ (uint64_t(1) << j);
    for (unsigned i = 0; i < n_; ++i)
      if ((col >> i) & 1) aug.set(i, j, true);
  }
  for (unsigned i = 0; i < n_; ++i) aug.set(i, n_ + i, true);
  // RREF restricted to the left block.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_ && rank < n_; ++c) {
    std::size_t sel = rank;
    while (sel < n_ && !aug.get(sel, c)) ++sel;
    if (sel == n_) continue;
    aug.swap_rows(rank, sel);
    for (std::size_t i = 0; i < n_; ++i)
      if (i != rank && aug.get(i, c)) aug.xor_row(i, rank);
    qs_pivot_.push_back(int(c));
    ++rank;
  }
  auto e_row = [&](std::size_t r) {
    uint64_t e = 0;
    for (unsigned k = 0; k < n_; ++k)
      if (aug.get(r, n_ + k)) e |= uint64_t(1) << k;
    return e;
  };
  for (std::size_t r = 0; r < rank; ++r) qs_transform_.push_back(e_row(r));
  for (std::size_t r = rank; r < n_; ++r) qs_check_rows_.push_back(e_row(r));
}

std::optional<uint64_t> FieldContext::solve_quadratic_raw(uint64_t c) const {
  for (uint64_t chk : qs_check_rows_)
    if (std::popcount(chk & c) & 1) return std::nullopt;
  uint64_t z = 0;
  for (std::size_t r = 0; r < qs_transform_.size(); ++r)
    if (std::popcount(qs_transform_[r] & c) & 1) z |= uint64_t(1) << qs_pivot_[r];
  return z;
}

uint64_t FieldContext::mul_raw(uint64_t a, uint64_t b) const {
  u128 acc = 0;
  while (b) {
    acc ^= u128(a) << std::countr_zero(b);
    b &= b - 1;
  }
  // product degree <= 2n-2, so the overflow part (degrees n..2n-2) fits a word
  uint64_t r = uint64_t(acc) & mask_;
  uint64_t hi = uint64_t(acc >> n_);
  while (hi) {
    r ^= overflow_rows_[std::countr_zero(hi)];
    hi &= hi - 1;
  }
  return r;
}

uint64_t FieldContext::square_raw(uint64_t a) const {
  uint64_t r = 0;
  while (a) {
    r ^= square_rows_[std::countr_zero(a)];
    a &= a - 1;
  }
  return r;
}

uint64_t FieldContext::inv_raw(uint64_t a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  // a^{2^n - 2} via the chain t_k = t_{k-1}^2 * a = a^{2^k - 1}.
  uint64_t t = a;
  for (unsigned k = 2; k < n_; ++k) t = mul_raw(square_raw(t), a);
  return square_raw(t);
}

uint64_t FieldContext::pow_raw(uint64_t a, uint64_t k) const {
  uint64_t r = 1, base = a;
  while (k) {
    if (k & 1) r = mul_raw(r, base);
    base = mul_raw(base, base);
    k >>= 1;
  }
  return r;
}

int FieldContext::trace_raw(uint64_t a) const {
  uint64_t t = a, acc = a;
  for (unsigned i = 1; i < n_; ++i) {
    t = square_raw(t);
    acc ^= t;
  }
  return int(acc & 1);
}

uint64_t FieldContext::half_trace_raw(uint64_t a) const {
  require(n_ % 2 == 1, Errc::OddDegreeRequired, "half trace needs odd n");
  uint64_t t = a, h = a;
  for (unsigned i = 1; i <= (n_ - 1) / 2; ++i) {
    t = square_raw(square_raw(t));
    h ^= t;
  }
  return h;
}

uint64_t FieldContext::sqrt_raw(uint64_t a) const {
  uint64_t r = a;
  for (unsigned i = 1; i < n_; ++i) r = square_raw(r);
  return r;
}

FieldElement FieldContext::element(uint64_t bits) const {
  require((bits & ~mask_) == 0, Errc::DegreeMismatch, "coefficient bits at degree >= n");
  return FieldElement(shared_from_this(), bits);
}

FieldElement FieldContext::zero() const { return element(0); }
FieldElement FieldContext::one() const { return element(1); }
FieldElement FieldContext::sigma() const { return element(2); }

FieldElement FieldContext::from_hex(const std::string& hex) const {
  return element(parse_hex_bits(hex));
}

FieldElement FieldContext::random_element(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return random_element(rng);
}

FieldElement FieldContext::random_element(std::mt19937_64& rng) const {
  return FieldElement(shared_from_this(), rng() & mask_);
}

std::string FieldContext::modulus_string() const { return modulus_to_string(n_, tail_); }

std::string FieldElement::to_hex() const { return bits_to_hex(bits_); }

std::string bits_to_hex(uint64_t bits) {
  if (bits == 0) return "0";
  std::ostringstream os;
  os << std::hex << bits;
  return os.str();
}

uint64_t parse_hex_bits(const std::string& hex) {
  require(!hex.empty(), Errc::ParseError, "empty hex string");
  uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else fail(Errc::ParseError, "bad hex digit in '" + hex + "'");
    require((v >> 60) == 0, Errc::ParseError, "hex value exceeds 64 bits");
    v = (v << 4) | uint64_t(d);
  }
  return v;
}

std::string modulus_to_string(unsigned n, uint64_t tail) {
  std::ostringstream os;
  os << "s^" << n;
  for (int k = int(n) - 1; k >= 0; --k) {
    if (!((tail >> k) & 1)) continue;
    if (k == 0) os << "+1";
    else if (k == 1) os << "+s";
    else os << "+s^" << k;
  }
  return os.str();
}

std::pair<unsigned, uint64_t> parse_modulus_string(const std::string& text) {
  // terms separated by '+': "s^k", "s", or "1"
  unsigned n = 0;
  std::vector<unsigned> degs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('+', pos);
    std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? text.size() : next + 1;
    if (term == "1") degs.push_back(0);
    else if (term == "s") degs.push_back(1);
    else if (term.rfind("s^", 0) == 0) {
      unsigned k = 0;
      for (char c : term.substr(2)) {
        require(std::isdigit(static_cast<unsigned char>(c)), Errc::ParseError,
                "bad modulus term '" + term + "'");
        k = k * 10 + unsigned(c - '0');
      }
      degs.push_back(k);
    } else fail(Errc::ParseError, "bad modulus term '" + term + "'");
  }
  require(!degs.empty(), Errc::ParseError, "empty modulus string");
  n = *std::max_element(degs.begin(), degs.end());
  require(n >= 2 && n <= 64, Errc::ParseError, "modulus degree out of range");
  uint64_t tail = 0;
  for (unsigned k : degs)
    if (k != n) tail ^= uint64_t(1) << k;
  return {n, tail};
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OddDegreeRequired: return "OddDegreeRequired";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DuplicateVariable: return "DuplicateVariable";
    case Errc::VariableAbsent: return "VariableAbsent";
    case Errc::Unsupported: return "Unsupported";
    case Errc::UnassignedVariable: return "UnassignedVariable";
    case Errc::UniverseMismatch: return "UniverseMismatch";
    case Errc::UnknownBlock: return "UnknownBlock";
    case Errc::UnregisteredVariable: return "UnregisteredVariable";
    case Errc::EmptyFactorBase: return "EmptyFactorBase";
    case Errc::TooManyMonomials: return "TooManyMonomials";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::Timeout: return "Timeout";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace pdp
