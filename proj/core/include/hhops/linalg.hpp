#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hhops/scalar.hpp"

namespace hhops {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

struct RowEchelon {
  RationalMatrix reduced;           // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// Basis of the column space, as vectors of length rows().
std::vector<RationalVector> image_basis(const RationalMatrix& m);

// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> invariant_factors(IntegerMatrix m);

// Converts when every entry is an integer; nullopt otherwise.
std::optional<IntegerMatrix> to_integer_matrix(const RationalMatrix& m);

}  // namespace hhops
