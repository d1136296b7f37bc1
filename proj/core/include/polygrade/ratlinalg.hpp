#pragma once

#include "polygrade/rational.hpp"

#include <cstddef>
#include <vector>

namespace polygrade {

// Dense rational matrix, row-major. Sized for the small exact computations
// in this project; every operation is exact.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix& operator*=(const Rat& scalar);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

// Rank by fraction-based Gaussian elimination.
std::size_t rat_rank(std::vector<std::vector<Rat>> rows);

// True iff v is a linear combination of the given vectors (all the same
// length as v); the empty family spans only the zero vector.
bool in_span(const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& v);

}  // namespace polygrade
