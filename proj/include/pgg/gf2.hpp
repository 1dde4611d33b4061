#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace pgg {

// Dense GF(2) linear system on 64-bit words, one row per equation.
class Gf2System {
 public:
  Gf2System(int rows, int cols);

  void set(int row, int col, bool value);
  void set_rhs(int row, bool value);

  // Gaussian elimination with first-nonzero-column pivoting and row swaps;
  // free variables are set to 0. Returns nullopt iff inconsistent.
  std::optional<std::vector<uint8_t>> solve() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_, cols_, words_;
  std::vector<uint64_t> bits_;  // rows_ x words_, last logical column is the rhs
};

}  // namespace pgg
