#include "hhops/linalg.hpp"

#include <algorithm>
#include <utility>

#include "hhops/errors.hpp"

namespace hhops {

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("multiply: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RationalVector> image_basis(const RationalMatrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<RationalVector> out;
  for (auto p : e.pivots) {
    RationalVector v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, p);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw DomainError("solve: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::vector<Integer> invariant_factors(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the remaining block becomes the pivot.
    bool found = false;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (!found || abs(m(r, c)) < abs(m(pr, pc)))) {
          found = true;
          pr = r;
          pc = c;
        }
    if (!found) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(t, c), m(pr, c));
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, t), m(r, pc));
    bool clean = true;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (m(r, t) == 0) continue;
      Integer q = m(r, t) / m(t, t);
      for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
      if (m(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (m(t, c) == 0) continue;
      Integer q = m(t, c) / m(t, t);
      for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
      if (m(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pivot again
    // Enforce divisibility of the rest of the block by the pivot.
    bool divides = true;
    for (std::size_t r = t + 1; r < rows && divides; ++r)
      for (std::size_t c = t + 1; c < cols; ++c)
        if (m(r, c) % m(t, t) != 0) {
          for (std::size_t cc = t; cc < cols; ++cc) m(t, cc) += m(r, cc);
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

std::optional<IntegerMatrix> to_integer_matrix(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) return std::nullopt;
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

}  // namespace hhops
