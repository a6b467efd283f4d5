#include "liegrad/equivalence.hpp"

#include <algorithm>
#include <climits>

#include "liegrad/errors.hpp"

namespace liegrad {

namespace {

// Basis of g grouped by the layers of v, split along `refinement` when every
// refinement layer sits inside one layer of v.
struct AdaptedBasis {
  std::vector<RatVec> vectors;
  std::vector<std::size_t> layer;  // layer of v containing each vector
};

AdaptedBasis adapted_basis(const Grading& v, const std::optional<Grading>& refinement) {
  const std::size_t n = v.algebra().dim();
  AdaptedBasis out;
  if (refinement) {
    std::vector<std::vector<RatVec>> grouped(v.size());
    bool compatible = true;
    for (const auto& r : refinement->layers()) {
      std::optional<std::size_t> home;
      for (std::size_t l = 0; l < v.size() && !home; ++l)
        if (in_span(v.layers()[l].basis, r.basis.front(), n)) home = l;
      if (!home) {
        compatible = false;
        break;
      }
      for (const auto& x : r.basis) {
        if (!in_span(v.layers()[*home].basis, x, n)) compatible = false;
        grouped[*home].push_back(x);
      }
    }
    if (compatible) {
      for (std::size_t l = 0; l < v.size(); ++l)
        for (auto& x : grouped[l]) {
          out.vectors.push_back(std::move(x));
          out.layer.push_back(l);
        }
      return out;
    }
  }
  for (std::size_t l = 0; l < v.size(); ++l)
    for (const auto& x : v.layers()[l].basis) {
      out.vectors.push_back(x);
      out.layer.push_back(l);
    }
  return out;
}

Rat rat_pow(const Rat& base, const Int& exponent) {
  if (!exponent.fits_slong_p()) throw Error("exponent too large in monomial system");
  long e = exponent.get_si();
  Rat b = e < 0 ? Rat(1 / base) : base;
  unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), m);
  return make_rat(num, den);
}

std::optional<Rat> rat_root(const Rat& c, const Int& degree) {
  if (degree == 1) return c;
  if (!degree.fits_ulong_p()) return std::nullopt;
  unsigned long d = degree.get_ui();
  bool negative = c < 0;
  if (negative && d % 2 == 0) return std::nullopt;
  Rat mag = negative ? Rat(-c) : c;
  Int num, den;
  if (mpz_root(num.get_mpz_t(), mag.get_num_mpz_t(), d) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), mag.get_den_mpz_t(), d) == 0) return std::nullopt;
  Rat r = make_rat(num, den);
  return negative ? Rat(-r) : r;
}

// Solves prod_j lambda_j^{E(r,j)} = c_r over the nonzero rationals.
std::optional<RatVec> solve_monomial_system(const std::vector<IntVec>& exps, const RatVec& rhs, std::size_t n) {
  if (exps.empty()) return RatVec(n, Rat(1));
  SmithForm snf = smith_normal_form(IntMat::from_rows(exps, n));
  const std::size_t m = exps.size();
  auto factors = snf.invariant_factors();
  RatVec y(n, Rat(1));
  for (std::size_t r = 0; r < m; ++r) {
    Rat c = 1;
    for (std::size_t s = 0; s < m; ++s)
      if (snf.U(r, s) != 0) c *= rat_pow(rhs[s], snf.U(r, s));
    if (r >= factors.size()) {
      if (c != 1) return std::nullopt;
      continue;
    }
    auto root = rat_root(c, factors[r]);
    if (!root) return std::nullopt;
    y[r] = *root;
  }
  RatVec lambda(n, Rat(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      if (snf.V(j, r) != 0) lambda[j] *= rat_pow(y[r], snf.V(j, r));
  return lambda;
}

class MonomialSearch {
 public:
  MonomialSearch(const Grading& v, const Grading& w, const AdaptedBasis& bv, const AdaptedBasis& bw,
                 const std::vector<std::size_t>& layer_map)
      : v_(v), w_(w), bv_(bv), bw_(bw), layer_map_(layer_map), n_(v.algebra().dim()) {
    pv_ = Mat::from_columns(bv.vectors, n_);
    pw_ = Mat::from_columns(bw.vectors, n_);
    gv_ = change_basis(v.algebra(), pv_);
    gw_ = change_basis(w.algebra(), pw_);
    pv_inv_ = *inverse(pv_);
    sigma_.assign(n_, n_);
    used_.assign(n_, false);
  }

  std::optional<LinMap> run() {
    if (dfs(0)) return result_;
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t i) const {
    // zero patterns of structure constants must agree on assigned triples
    for (std::size_t a = 0; a <= i; ++a)
      for (std::size_t b = 0; b <= i; ++b)
        for (std::size_t k = 0; k <= i; ++k) {
          if (a != i && b != i && k != i) continue;
          bool zv = gv_.c(a, b, k) == 0;
          bool zw = gw_.c(sigma_[a], sigma_[b], sigma_[k]) == 0;
          if (zv != zw) return false;
        }
    return true;
  }

  bool dfs(std::size_t i) {
    if (i == n_) return finish();
    std::size_t target = layer_map_[bv_.layer[i]];
    for (std::size_t j = 0; j < n_; ++j) {
      if (used_[j] || bw_.layer[j] != target) continue;
      sigma_[i] = j;
      used_[j] = true;
      if (consistent(i) && dfs(i + 1)) return true;
      used_[j] = false;
    }
    sigma_[i] = n_;
    return false;
  }

  bool finish() {
    std::vector<IntVec> exps;
    RatVec rhs;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        for (std::size_t k = 0; k < n_; ++k) {
          const Rat& cv = gv_.c(a, b, k);
          if (cv == 0) continue;
          // lambda_a lambda_b / lambda_k = cv / cw
          IntVec row = zero_int_vec(n_);
          row[a] += 1;
          row[b] += 1;
          row[k] -= 1;
          exps.push_back(std::move(row));
          rhs.push_back(cv / gw_.c(sigma_[a], sigma_[b], sigma_[k]));
        }
    auto lambda = solve_monomial_system(exps, rhs, n_);
    if (!lambda) return false;
    Mat m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) m(sigma_[i], i) = (*lambda)[i];
    LinMap phi = pw_ * m * pv_inv_;
    if (!is_automorphism(v_.algebra(), phi)) return false;
    for (std::size_t l = 0; l < v_.size(); ++l) {
      std::vector<RatVec> image;
      for (const auto& x : v_.layers()[l].basis) image.push_back(phi * x);
      if (span_basis(image, n_) != w_.layers()[layer_map_[l]].basis) return false;
    }
    result_ = std::move(phi);
    return true;
  }

  const Grading& v_;
  const Grading& w_;
  const AdaptedBasis& bv_;
  const AdaptedBasis& bw_;
  const std::vector<std::size_t>& layer_map_;
  std::size_t n_;
  Mat pv_, pw_, pv_inv_;
  LieAlgebra gv_, gw_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
  LinMap result_;
};

}  // namespace

std::vector<GroupHom> matching_isomorphisms(const Grading& v, const Grading& w) {
  const std::size_t k = v.rank(), N = v.size();
  if (w.rank() != k || w.size() != N) return {};
  // k independent weights of v, chosen greedily in layer order
  std::vector<std::size_t> sel;
  std::vector<RatVec> chosen;
  for (std::size_t l = 0; l < N && sel.size() < k; ++l) {
    RatVec a = to_rat(v.layers()[l].weight);
    chosen.push_back(a);
    if (rank(Mat::from_rows(chosen, k)) == chosen.size()) {
      sel.push_back(l);
    } else {
      chosen.pop_back();
    }
  }
  if (sel.size() != k) throw InvalidGrading("weights do not span the grading group");
  Mat a_inv(0, 0);
  if (k > 0) a_inv = *inverse(Mat::from_columns(chosen, k));

  std::vector<GroupHom> out;
  std::vector<std::size_t> image(k);
  std::vector<bool> used(N, false);
  auto try_candidate = [&] {
    std::vector<RatVec> cols;
    for (auto j : image) cols.push_back(to_rat(w.layers()[j].weight));
    Mat f = k > 0 ? Mat::from_columns(cols, k) * a_inv : Mat(0, 0);
    IntMat fi(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        if (!is_integer(f(r, c))) return;
        fi(r, c) = f(r, c).get_num();
      }
    if (k > 0 && abs(determinant(fi)) != 1) return;
    std::vector<bool> hit(N, false);
    for (std::size_t l = 0; l < N; ++l) {
      auto t = w.find(fi * v.layers()[l].weight);
      if (!t || hit[*t] || w.layers()[*t].basis.size() != v.layers()[l].basis.size()) return;
      hit[*t] = true;
    }
    for (const auto& h : out)
      if (h.matrix == fi) return;
    out.push_back({std::move(fi)});
  };
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == k) {
      try_candidate();
      return;
    }
    const std::size_t dim = v.layers()[sel[at]].basis.size();
    for (std::size_t j = 0; j < N; ++j) {
      if (used[j] || w.layers()[j].basis.size() != dim) continue;
      used[j] = true;
      image[at] = j;
      self(self, at + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
  return out;
}

EquivalenceResult find_equivalence(const Grading& v, const Grading& w, const std::optional<Grading>& refinement) {
  using Kind = EquivalenceResult::Kind;
  if (v.algebra_ptr() != w.algebra_ptr() && !(v.algebra() == w.algebra())) throw DifferentAlgebra();
  EquivalenceResult res;
  if (v.rank() != w.rank()) {
    res.kind = Kind::Distinguished;
    res.reason = "rank";
    return res;
  }
  auto tv = rank_and_type(v), tw = rank_and_type(w);
  if (tv.type != tw.type) {
    res.kind = Kind::Distinguished;
    res.reason = "type";
    return res;
  }
  const std::size_t n = v.algebra().dim();
  if (v == w) {
    res.kind = Kind::Equivalent;
    res.f = GroupHom{IntMat::identity(v.rank())};
    res.phi = Mat::identity(n);
    return res;
  }
  auto candidates = matching_isomorphisms(v, w);
  if (candidates.empty()) {
    res.kind = Kind::Distinguished;
    res.reason = "no layer-matching isomorphism of grading groups";
    return res;
  }
  AdaptedBasis bv = adapted_basis(v, refinement);
  AdaptedBasis bw = adapted_basis(w, refinement);
  for (const auto& f : candidates) {
    std::vector<std::size_t> layer_map(v.size());
    for (std::size_t l = 0; l < v.size(); ++l) layer_map[l] = *w.find(f.apply(v.layers()[l].weight));
    MonomialSearch search(v, w, bv, bw, layer_map);
    if (auto phi = search.run()) {
      res.kind = Kind::Equivalent;
      res.f = f;
      res.phi = std::move(*phi);
      return res;
    }
  }
  res.kind = Kind::Undecided;
  res.candidates = std::move(candidates);
  return res;
}

}  // namespace liegrad
