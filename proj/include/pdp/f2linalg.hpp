#ifndef PDP_F2LINALG_HPP
#define PDP_F2LINALG_HPP

#include <cstdint>
#include <vector>

namespace pdp {

/// Dense matrix over F_2 with bit-packed rows. Small and boring on purpose:
/// it backs the Artin-Schreier solver and the linearization backend, nothing else.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    uint64_t& w = data_[r * words_ + c / 64];
    uint64_t m = uint64_t(1) << (c % 64);
    w = v ? (w | m) : (w & ~m);
  }
  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row();

  /// In-place reduced row echelon form. Returns the pivot column of each
  /// pivot row (row i of the result, i < rank, pivots ascending).
  std::vector<std::size_t> rref();

  const uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  std::size_t words_per_row() const { return words_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

}  // namespace pdp

#endif
