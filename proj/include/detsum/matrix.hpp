#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "detsum/gf2k.hpp"

namespace detsum {

// Dense row-major matrix over GF(2^k). The field is passed to each
// operation rather than stored, so matrices stay plain values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix square(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<FieldElement> data() { return data_; }
  std::span<const FieldElement> data() const { return data_; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

// Determinant by Gaussian elimination, pivoting on the first nonzero entry of
// each column. Over characteristic two this is also the permanent.
FieldElement determinant(const FieldContext& ctx, Matrix m);

// Same, destroying an n x n row-major block in place. Used on the zeta tables.
FieldElement determinant_in_place(const FieldContext& ctx, std::span<FieldElement> entries,
                                  std::size_t n);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const FieldContext& ctx, const Matrix& a, FieldElement s);
Matrix mat_mul(const FieldContext& ctx, const Matrix& a, const Matrix& b);
Matrix mat_pow(const FieldContext& ctx, const Matrix& a, int l);
Matrix transpose(const Matrix& a);

// Sample points of a univariate polynomial.
struct EvaluationTable {
  std::vector<FieldElement> points;
  std::vector<FieldElement> values;
};

// Coefficients c_0..c_{d} of the unique polynomial of degree <= d = N-1
// through the N table entries. O(N^2).
std::vector<FieldElement> interpolate(const FieldContext& ctx, const EvaluationTable& table);

// [r^degree] of the interpolating polynomial; zero when degree >= N.
FieldElement lagrange_coefficient(const FieldContext& ctx, const EvaluationTable& table,
                                  int degree);

// Horner evaluation of sum_i coeffs[i] x^i.
FieldElement eval_poly(const FieldContext& ctx, std::span<const FieldElement> coeffs,
                       FieldElement x);

}  // namespace detsum
