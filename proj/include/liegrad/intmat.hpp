#pragma once

#include <cstddef>
#include <vector>

#include "liegrad/matrix.hpp"
#include "liegrad/rational.hpp"

namespace liegrad {

/// Dense row-major integer matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  IntMat transpose() const;
  Mat to_rat() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Int& f);
  void add_col(std::size_t dst, std::size_t src, const Int& f);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  IntMat operator*(const IntMat& o) const;
  IntVec operator*(const IntVec& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Int determinant(const IntMat& m);

/// S = U * m * V with U, V unimodular and S diagonal with nonnegative
/// entries d_1 | d_2 | ... (zeros last).
struct SmithForm {
  IntMat S, U, V;
  /// Nonzero diagonal entries.
  std::vector<Int> invariant_factors() const;
};
SmithForm smith_normal_form(const IntMat& m);

/// H = U * m in row Hermite normal form: echelon with positive pivots,
/// entries above each pivot reduced into [0, pivot), zero rows at the bottom.
struct HermiteForm {
  IntMat H, U;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMat& m);

/// Scales a rational vector by the lcm of denominators and divides by the
/// content, giving a primitive integer vector with the same direction.
IntVec primitive_integer_vector(const RatVec& v);

}  // namespace liegrad
