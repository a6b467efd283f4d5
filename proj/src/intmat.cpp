#include "liegrad/intmat.hpp"

#include <utility>

#include "liegrad/errors.hpp"

namespace liegrad {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t width) {
  IntMat m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw DimensionMismatch("IntMat::from_rows: ragged input");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMat::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMat::col(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat IntMat::to_rat() const {
  Mat m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  return m;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMat::add_row(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
}

void IntMat::add_col(std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
}

void IntMat::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMat::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("integer matrix product");
  IntMat m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += (*this)(i, k) * o(k, j);
    }
  return m;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("integer matrix-vector product");
  IntVec out = zero_int_vec(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

Int determinant(const IntMat& m) {
  Rat d = determinant(m.to_rat());
  return d.get_num();
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

namespace {

// Floor division keeping the remainder in [0, |b|) is not needed for Smith
// reduction; truncating division is enough to strictly shrink |entries|.
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm f{m, IntMat::identity(R), IntMat::identity(C)};
  IntMat& S = f.S;
  for (std::size_t t = 0; t < R && t < C; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block, first in row-major order
      bool found = false;
      std::size_t pr = 0, pc = 0;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c)
          if (S(r, c) != 0 && (!found || abs(S(r, c)) < abs(S(pr, pc)))) {
            found = true;
            pr = r;
            pc = c;
          }
      if (!found) return f;
      S.swap_rows(t, pr);
      f.U.swap_rows(t, pr);
      S.swap_cols(t, pc);
      f.V.swap_cols(t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (S(r, t) == 0) continue;
        Int q = tdiv(S(r, t), S(t, t));
        S.add_row(r, t, -q);
        f.U.add_row(r, t, -q);
        if (S(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (S(t, c) == 0) continue;
        Int q = tdiv(S(t, c), S(t, t));
        S.add_col(c, t, -q);
        f.V.add_col(c, t, -q);
        if (S(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      // divisibility: fold an offending row into row t and go again
      bool divisible = true;
      for (std::size_t r = t + 1; r < R && divisible; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (S(r, c) % S(t, t) != 0) {
            S.add_row(t, r, 1);
            f.U.add_row(t, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;
      if (S(t, t) < 0) {
        S.negate_row(t);
        f.U.negate_row(t);
      }
      break;
    }
  }
  return f;
}

HermiteForm hermite_normal_form(const IntMat& m) {
  const std::size_t R = m.rows(), C = m.cols();
  HermiteForm h{m, IntMat::identity(R), 0};
  IntMat& H = h.H;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    for (;;) {
      bool found = false;
      std::size_t p = 0;
      for (std::size_t i = r; i < R; ++i)
        if (H(i, c) != 0 && (!found || abs(H(i, c)) < abs(H(p, c)))) {
          found = true;
          p = i;
        }
      if (!found) break;
      H.swap_rows(r, p);
      h.U.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (H(i, c) == 0) continue;
        Int q = tdiv(H(i, c), H(r, c));
        H.add_row(i, r, -q);
        h.U.add_row(i, r, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      h.U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(H(i, c), H(r, c));
      H.add_row(i, r, -q);
      h.U.add_row(i, r, -q);
    }
    ++r;
  }
  h.rank = r;
  return h;
}

IntVec primitive_integer_vector(const RatVec& v) {
  Int den = common_denominator(v);
  IntVec out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rat(v[i] * den).get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace liegrad
