#include "liegrad/lie_algebra.hpp"

#include "liegrad/errors.hpp"

namespace liegrad {

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RatVec& value) {
  if (i >= n_ || j >= n_ || value.size() != n_) throw DimensionMismatch("set_bracket: index or length");
  for (std::size_t k = 0; k < n_; ++k) {
    c(i, j, k) = value[k];
    c(j, i, k) = -value[k];
  }
}

RatVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  RatVec v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

RatVec LieAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket: vector length");
  RatVec out = zero_rat_vec(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != 0) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

LinMap LieAlgebra::ad(const RatVec& x) const {
  LinMap m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    RatVec col = bracket(x, unit_rat_vec(n_, j));
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::string LieAlgebra::label(std::size_t i) const {
  if (i < labels.size()) return labels[i];
  return "X" + std::to_string(i + 1);
}

LieAlgebra algebra_from_brackets(std::size_t dim, const std::vector<BracketTerm>& terms) {
  LieAlgebra g(dim);
  for (const auto& t : terms) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw DimensionMismatch("bracket index out of range");
    if (t.i == t.j) throw ParseError("bracket of a basis vector with itself must vanish");
    g.c(t.i, t.j, t.k) += t.coeff;
    g.c(t.j, t.i, t.k) -= t.coeff;
  }
  return g;
}

std::string Validation::describe() const {
  if (kind == Kind::Ok) return "ok";
  std::string s = kind == Kind::Antisymmetry ? "antisymmetry violated at (" : "Jacobi identity violated at (";
  for (std::size_t i = 0; i < witness.size(); ++i) s += (i ? "," : "") + std::to_string(witness[i] + 1);
  return s + ")";
}

Validation validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k)) return {Validation::Kind::Antisymmetry, {i, j}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
          if (s != 0) return {Validation::Kind::Jacobi, {i, j, k, l}};
        }
  return {};
}

std::vector<LinMap> derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // unknown D(a,b) at index a*n + b; one row per (i, j, l) with i < j
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        // D[e_i,e_j] - [De_i,e_j] - [e_i,De_j], component l
        RatVec row = zero_rat_vec(n * n);
        for (std::size_t k = 0; k < n; ++k)
          if (g.c(i, j, k) != 0) row[var(l, k)] += g.c(i, j, k);
        for (std::size_t a = 0; a < n; ++a) {
          if (g.c(a, j, l) != 0) row[var(a, i)] -= g.c(a, j, l);
          if (g.c(i, a, l) != 0) row[var(a, j)] -= g.c(i, a, l);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<LinMap> out;
  for (const auto& v : nullspace(Mat::from_rows(rows, n * n))) {
    LinMap d(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d(a, b) = v[var(a, b)];
    out.push_back(std::move(d));
  }
  return out;
}

bool is_derivation(const LieAlgebra& g, const LinMap& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec lhs = d * g.bracket_basis(i, j);
      RatVec rhs = g.bracket(d.col(i), unit_rat_vec(n, j)) + g.bracket(unit_rat_vec(n, i), d.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_automorphism(const LieAlgebra& g, const LinMap& phi) {
  const std::size_t n = g.dim();
  if (phi.rows() != n || phi.cols() != n || determinant(phi) == 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi * g.bracket_basis(i, j) != g.bracket(phi.col(i), phi.col(j))) return false;
  return true;
}

std::vector<LinMap> centralizer(const std::vector<LinMap>& ambient, const std::vector<LinMap>& bs) {
  if (bs.empty()) return ambient;
  if (ambient.empty()) return {};
  const std::size_t n = ambient[0].rows();
  const std::size_t m = ambient.size();
  // sum_t x_t [A_t, B] = 0 entrywise for every B
  std::vector<RatVec> rows;
  std::vector<std::vector<LinMap>> comm(m);
  for (std::size_t t = 0; t < m; ++t)
    for (const auto& b : bs) comm[t].push_back(commutator(ambient[t], b));
  for (std::size_t bi = 0; bi < bs.size(); ++bi)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        RatVec row(m);
        for (std::size_t t = 0; t < m; ++t) row[t] = comm[t][bi](r, c);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  if (rows.empty()) return ambient;
  std::vector<LinMap> out;
  for (const auto& x : nullspace(Mat::from_rows(rows, m))) {
    LinMap a(n, n);
    for (std::size_t t = 0; t < m; ++t)
      if (x[t] != 0) a = a + x[t] * ambient[t];
    out.push_back(std::move(a));
  }
  return out;
}

Poly minimal_polynomial(const LinMap& a) {
  if (!a.square()) throw DimensionMismatch("minimal polynomial of non-square matrix");
  const std::size_t n = a.rows();
  Poly result = Poly::constant(1);
  std::vector<RatVec> covered;  // span of all Krylov vectors so far
  for (std::size_t s = 0; s < n; ++s) {
    RatVec seed = unit_rat_vec(n, s);
    if (in_span(covered, seed, n)) continue;
    std::vector<RatVec> krylov{seed};
    for (;;) {
      RatVec next = a * krylov.back();
      auto coeffs = solve(Mat::from_columns(krylov, n), next);
      if (coeffs) {
        std::vector<Rat> p(krylov.size() + 1);
        for (std::size_t i = 0; i < krylov.size(); ++i) p[i] = -(*coeffs)[i];
        p.back() = 1;
        result = poly_lcm(result, Poly(std::move(p)));
        break;
      }
      krylov.push_back(std::move(next));
    }
    for (auto& v : krylov) covered.push_back(std::move(v));
    covered = span_basis(covered, n);
    if (covered.size() == n) break;
  }
  return result;
}

bool is_semisimple(const LinMap& a) {
  Poly p = minimal_polynomial(a);
  return poly_gcd(p, derivative(p)).degree() == 0;
}

bool is_nilpotent_map(const LinMap& a) {
  // minimal polynomial is a power of t
  Poly p = minimal_polynomial(a);
  for (int i = 0; i < p.degree(); ++i)
    if (p.coeff(static_cast<std::size_t>(i)) != 0) return false;
  return true;
}

JordanParts jordan_decompose(const LinMap& a) {
  Poly q = squarefree_part(minimal_polynomial(a));
  Poly dq = derivative(q);
  LinMap s = a;
  // Newton iteration S <- S - q(S) q'(S)^{-1}; q'(S) is invertible since
  // q is squarefree and S stays a polynomial in A
  for (;;) {
    LinMap qs = q(s);
    if (qs.is_zero()) break;
    auto inv = inverse(dq(s));
    if (!inv) throw Error("jordan_decompose: derivative of squarefree part not invertible");
    s = s - qs * *inv;
  }
  return {s, a - s};
}

namespace {

std::vector<RatVec> bracket_with_all(const LieAlgebra& g, const std::vector<RatVec>& term) {
  const std::size_t n = g.dim();
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : term) {
      RatVec b = g.bracket(unit_rat_vec(n, i), v);
      if (!is_zero(b)) gens.push_back(std::move(b));
    }
  if (gens.empty()) return {};
  return span_basis(gens, n);
}

}  // namespace

LcsData lcs_adapted(const LieAlgebra& g, bool require_nilpotent) {
  const std::size_t n = g.dim();
  LcsData d;
  std::vector<RatVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(unit_rat_vec(n, i));
  d.terms.push_back(all);
  while (!d.terms.back().empty()) {
    auto next = bracket_with_all(g, d.terms.back());
    if (next.size() == d.terms.back().size()) break;  // stalled
    d.terms.push_back(std::move(next));
  }
  d.nilpotent = d.terms.back().empty();
  if (!d.nilpotent && require_nilpotent) throw NotNilpotent();

  // complement of terms[i+1] inside terms[i], greedily from the RREF basis
  std::vector<RatVec> chosen_cols;
  std::size_t last = d.nilpotent ? d.terms.size() - 1 : d.terms.size();
  for (std::size_t t = 0; t < last; ++t) {
    std::vector<RatVec> span = t + 1 < d.terms.size() ? d.terms[t + 1] : std::vector<RatVec>{};
    std::size_t target = d.terms[t].size();
    for (const auto& v : d.terms[t]) {
      if (span.size() == target) break;
      if (in_span(span, v, n)) continue;
      span.push_back(v);
      chosen_cols.push_back(v);
      d.degrees.push_back(static_cast<unsigned>(t + 1));
    }
  }
  d.change = Mat::from_columns(chosen_cols, n);
  return d;
}

bool is_nilpotent(const LieAlgebra& g) { return lcs_adapted(g, false).nilpotent; }

LieAlgebra change_basis(const LieAlgebra& g, const LinMap& p) {
  const std::size_t n = g.dim();
  auto inv = inverse(p);
  if (!inv) throw DimensionMismatch("change_basis: singular basis matrix");
  LieAlgebra h(n);
  h.name = g.name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) h.set_bracket(i, j, *inv * g.bracket(p.col(i), p.col(j)));
  return h;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  LieAlgebra s(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.c(i, j, k) = a.c(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s.c(n + i, n + j, n + k) = b.c(i, j, k);
  return s;
}

LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const std::vector<RatVec>& basis) {
  const std::size_t n = g.dim(), m = basis.size();
  Mat cols = Mat::from_columns(basis, n);
  LieAlgebra h(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto x = solve(cols, g.bracket(basis[i], basis[j]));
      if (!x) throw DimensionMismatch("restrict_to_subalgebra: span not closed under brackets");
      h.set_bracket(i, j, *x);
    }
  return h;
}

}  // namespace liegrad
