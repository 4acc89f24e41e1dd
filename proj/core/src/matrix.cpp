#include <irrlat/matrix.hpp>

#include <algorithm>
#include <utility>

#include <irrlat/errors.hpp>

namespace irrlat {

ZMatrix::ZMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ZMatrix::ZMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw invariant_error("ZMatrix: ragged rows");
    for (long v : row) data_.emplace_back(v);
  }
}

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool ZMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool ZMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& v) { return v == 0; });
}

ZMatrix ZMatrix::transposed() const {
  ZMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void ZMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void ZMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void ZMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void ZMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
}

void ZMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
}

ZMatrix operator*(const ZMatrix& a, const ZMatrix& b) {
  if (a.cols() != b.rows()) throw invariant_error("ZMatrix: dimension mismatch in product");
  ZMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ZMatrix operator*(const Int& c, const ZMatrix& a) {
  ZMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = c * a(i, j);
  return r;
}

ZMatrix vstack(const ZMatrix& top, const ZMatrix& bottom) {
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw invariant_error("vstack: column counts differ");
  const std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  ZMatrix r(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(top.rows() + i, j) = bottom(i, j);
  return r;
}

ZMatrix block_diagonal(const ZMatrix& a, const ZMatrix& b) {
  ZMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

// Bareiss: every intermediate entry is a minor of the (row-permuted)
// input, so the division by the previous pivot is exact.
Int determinant(const ZMatrix& input) {
  if (input.rows() != input.cols())
    throw invariant_error("determinant: matrix must be square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  ZMatrix m = input;
  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

std::size_t rank(const ZMatrix& input) {
  ZMatrix m = input;
  const std::size_t limit = std::min(m.rows(), m.cols());
  Int prev(1);
  std::size_t t = 0;
  while (t < limit) {
    std::size_t pi = m.rows(), pj = 0;
    for (std::size_t i = t; i < m.rows() && pi == m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m.rows()) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        Int v = m(i, j) * m(t, t) - m(i, t) * m(t, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, t) = 0;
    }
    prev = m(t, t);
    ++t;
  }
  return t;
}

}  // namespace irrlat
