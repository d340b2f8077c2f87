#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace kcas {

// Dense rational matrix with the handful of exact-linear-algebra operations
// the library needs: rank, solving, kernel bases. Sizes here are tiny
// (bounded by the rank of E8 or the size of a witness subset), so plain
// fraction-free-ish Gaussian elimination over mpq is more than fast enough.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMatrix fromRows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void appendRow(const std::vector<Rat>& row);

  std::size_t rank() const;

  // One solution x of A x = b, or nullopt if inconsistent. When the kernel is
  // nontrivial the free variables are set to zero.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

  // Basis of { x : A x = 0 }.
  std::vector<std::vector<Rat>> kernelBasis() const;

  // True iff `row` lies in the row space of this matrix.
  bool rowInRowSpace(const std::vector<Rat>& row) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace kcas
