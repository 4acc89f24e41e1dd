#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <irrlat/numeric.hpp>

namespace irrlat {

// Dense row-major matrix over the arbitrary-precision integers.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols);
  ZMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static ZMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_symmetric() const;
  bool is_zero() const;
  ZMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

  friend ZMatrix operator*(const ZMatrix& a, const ZMatrix& b);
  friend ZMatrix operator*(const Int& c, const ZMatrix& a);
  bool operator==(const ZMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

ZMatrix vstack(const ZMatrix& top, const ZMatrix& bottom);
ZMatrix block_diagonal(const ZMatrix& a, const ZMatrix& b);

// exact determinant, fraction-free elimination; determinant of the 0x0
// matrix is 1
Int determinant(const ZMatrix& m);
// rank over the rationals
std::size_t rank(const ZMatrix& m);

}  // namespace irrlat
