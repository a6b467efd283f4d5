#include "liegrad/matrix.hpp"

#include <utility>

#include "liegrad/errors.hpp"

namespace liegrad {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(const std::vector<RatVec>& cols, std::size_t height) {
  Mat m(height, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != height) throw DimensionMismatch("from_columns: ragged input");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows, std::size_t width) {
  Mat m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw DimensionMismatch("from_rows: ragged input");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVec Mat::row(std::size_t r) const {
  return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec Mat::col(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product");
  Mat m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) m(i, j) += a * o(k, j);
    }
  return m;
}

RatVec Mat::operator*(const RatVec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
  RatVec out = zero_rat_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Mat operator*(const Rat& s, const Mat& m) {
  Mat out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& a = res.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    Rat inv = 1 / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(lead_row, j) != 0) a(r, j) -= f * a(lead_row, j);
    }
    res.pivots.push_back(c);
    ++lead_row;
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<RatVec> nullspace(const Mat& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec x = zero_rat_vec(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RatVec> solve(const Mat& m, const RatVec& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: rhs length");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  RatVec x = zero_rat_vec(m.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] == m.cols()) return std::nullopt;
    x[rr.pivots[r]] = rr.reduced(r, m.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat(0, 0);
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

Rat determinant(const Mat& m) {
  if (!m.square()) throw DimensionMismatch("determinant of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rat f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& vectors, std::size_t dim) {
  RrefResult rr = rref(Mat::from_rows(vectors, dim));
  std::vector<RatVec> out;
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) out.push_back(rr.reduced.row(r));
  return out;
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Mat::from_columns(basis, dim), v).has_value();
}

std::vector<RatVec> intersect_spans(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                    std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  // x = sum s_i a_i = sum t_j b_j  <=>  [A | -B] (s,t) = 0
  std::vector<RatVec> cols = a;
  for (const auto& v : b) cols.push_back(Rat(-1) * v);
  std::vector<RatVec> out;
  for (const auto& st : nullspace(Mat::from_columns(cols, dim))) {
    RatVec x = zero_rat_vec(dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (st[i] != 0) x = x + st[i] * a[i];
    out.push_back(std::move(x));
  }
  return span_basis(out, dim);
}

}  // namespace liegrad
