#include "pdp/f2linalg.hpp"

#include <algorithm>

namespace pdp {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void F2Matrix::xor_row(std::size_t dst, std::size_t src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (std::size_t k = 0; k < words_; ++k) d[k] ^= s[k];
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  uint64_t* ra = row(a);
  uint64_t* rb = row(b);
  for (std::size_t k = 0; k < words_; ++k) std::swap(ra[k], rb[k]);
}

void F2Matrix::append_row() {
  data_.resize(data_.size() + words_, 0);
  ++rows_;
}

std::vector<std::size_t> F2Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = r;
    while (sel < rows_ && !get(sel, c)) ++sel;
    if (sel == rows_) continue;
    swap_rows(r, sel);
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) xor_row(i, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace pdp
