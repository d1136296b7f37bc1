#include "polygrade/ratlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace polygrade {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rat& q : data_) {
    if (q != 0) return false;
  }
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("RatMatrix: inner dimensions differ");
  }
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("RatMatrix: shapes differ");
  }
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

RatMatrix& RatMatrix::operator*=(const Rat& scalar) {
  for (Rat& q : data_) q *= scalar;
  return *this;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t rat_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n_cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != n_cols) {
      throw std::invalid_argument("rat_rank: ragged rows");
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n_cols; ++c) {
        rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& v) {
  bool v_is_zero = true;
  for (const Rat& q : v) {
    if (q != 0) {
      v_is_zero = false;
      break;
    }
  }
  if (v_is_zero) return true;
  if (vectors.empty()) return false;
  const std::size_t base = rat_rank(vectors);
  auto extended = vectors;
  extended.push_back(v);
  return rat_rank(std::move(extended)) == base;
}

}  // namespace polygrade
