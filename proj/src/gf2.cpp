#include "pgg/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgg {

Gf2System::Gf2System(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("gf2: negative dimensions");
  words_ = (cols + 1 + 63) / 64;  // +1 for the augmented rhs column
  bits_.assign(static_cast<size_t>(rows_) * words_, 0);
}

void Gf2System::set(int row, int col, bool value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("gf2: index out of range");
  uint64_t mask = uint64_t(1) << (col % 64);
  auto& word = bits_[static_cast<size_t>(row) * words_ + col / 64];
  word = value ? (word | mask) : (word & ~mask);
}

void Gf2System::set_rhs(int row, bool value) {
  if (row < 0 || row >= rows_) throw std::out_of_range("gf2: row out of range");
  uint64_t mask = uint64_t(1) << (cols_ % 64);
  auto& word = bits_[static_cast<size_t>(row) * words_ + cols_ / 64];
  word = value ? (word | mask) : (word & ~mask);
}

std::optional<std::vector<uint8_t>> Gf2System::solve() const {
  std::vector<uint64_t> m = bits_;
  std::vector<int> pivot_col(rows_, -1);
  const int rhs_word = cols_ / 64;
  const uint64_t rhs_mask = uint64_t(1) << (cols_ % 64);

  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int word = col / 64;
    uint64_t mask = uint64_t(1) << (col % 64);
    int pivot = -1;
    for (int row = rank; row < rows_; ++row) {
      if (m[static_cast<size_t>(row) * words_ + word] & mask) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) continue;
    if (pivot != rank) {
      for (int w = 0; w < words_; ++w)
        std::swap(m[static_cast<size_t>(rank) * words_ + w],
                  m[static_cast<size_t>(pivot) * words_ + w]);
    }
    for (int row = 0; row < rows_; ++row) {
      if (row != rank && (m[static_cast<size_t>(row) * words_ + word] & mask)) {
        for (int w = 0; w < words_; ++w)
          m[static_cast<size_t>(row) * words_ + w] ^= m[static_cast<size_t>(rank) * words_ + w];
      }
    }
    pivot_col[rank++] = col;
  }

  for (int row = rank; row < rows_; ++row)
    if (m[static_cast<size_t>(row) * words_ + rhs_word] & rhs_mask) return std::nullopt;

  std::vector<uint8_t> x(cols_, 0);  // free variables stay 0
  for (int r = 0; r < rank; ++r)
    x[pivot_col[r]] = (m[static_cast<size_t>(r) * words_ + rhs_word] & rhs_mask) ? 1 : 0;
  return x;
}

}  // namespace pgg
