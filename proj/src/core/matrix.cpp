#include "matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace kcas {

RatMatrix RatMatrix::fromRows(const std::vector<std::vector<Rat>>& rows) {
  RatMatrix m;
  for (const auto& r : rows) m.appendRow(r);
  return m;
}

void RatMatrix::appendRow(const std::vector<Rat>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

// Row-reduces `a` (rows x cols) in place, returning the pivot column of each
// pivot row in order. Reduced row echelon form.
std::vector<std::size_t> rref(std::vector<Rat>& a, std::size_t rows,
                              std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel * cols + col] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols; ++c)
        std::swap(a[sel * cols + c], a[row * cols + c]);
    Rat inv = Rat(1) / a[row * cols + col];
    for (std::size_t c = col; c < cols; ++c) a[row * cols + c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row) continue;
      Rat f = a[r * cols + col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        a[r * cols + c] -= f * a[row * cols + c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  std::vector<Rat> a = a_;
  return rref(a, rows_, cols_).size();
}

std::optional<std::vector<Rat>> RatMatrix::solve(
    const std::vector<Rat>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("rhs size mismatch");
  std::size_t cols = cols_ + 1;
  std::vector<Rat> aug(rows_ * cols);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug[r * cols + c] = at(r, c);
    aug[r * cols + cols_] = rhs[r];
  }
  std::vector<std::size_t> pivots = rref(aug, rows_, cols);
  // Inconsistent iff some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug[i * cols + cols_];
  return x;
}

std::vector<std::vector<Rat>> RatMatrix::kernelBasis() const {
  std::vector<Rat> a = a_;
  std::vector<std::size_t> pivots = rref(a, rows_, cols_);
  std::vector<bool> isPivot(cols_, false);
  for (std::size_t p : pivots) isPivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (isPivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RatMatrix::rowInRowSpace(const std::vector<Rat>& row) const {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  RatMatrix ext = *this;
  ext.appendRow(row);
  return ext.rank() == rank();
}

}  // namespace kcas
