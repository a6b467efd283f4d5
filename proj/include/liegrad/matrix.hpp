#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liegrad/rational.hpp"

namespace liegrad {

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `height`).
  static Mat from_columns(const std::vector<RatVec>& cols, std::size_t height);
  static Mat from_rows(const std::vector<RatVec>& rows, std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec row(std::size_t r) const;
  RatVec col(std::size_t c) const;

  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  RatVec operator*(const RatVec& v) const;
  friend Mat operator*(const Rat& s, const Mat& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Mat commutator(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot is the first nonzero entry by row index.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Basis of {x : m x = 0}: one vector per free column, ascending, with that
/// free variable set to 1 and the other free variables 0.
std::vector<RatVec> nullspace(const Mat& m);

/// Any solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const Mat& m, const RatVec& b);

std::optional<Mat> inverse(const Mat& m);
Rat determinant(const Mat& m);

/// Canonical basis (nonzero RREF rows) of the span of the given vectors.
std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, std::size_t dim);

/// True when v lies in the span of `basis`.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v, std::size_t dim);

/// Basis of the intersection of two subspaces given by spanning sets.
std::vector<RatVec> intersect_spans(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                    std::size_t dim);

}  // namespace liegrad
