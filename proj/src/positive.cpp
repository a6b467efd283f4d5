#include "liegrad/positive.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liegrad/errors.hpp"
#include "liegrad/lp.hpp"

namespace liegrad {

std::string StratificationResult::describe_certificate() const {
  if (!certificate) return "";
  const auto& c = *certificate;
  return "component " + std::to_string(c[2]) + " of the derivation equation for adapted basis vectors " +
         std::to_string(c[0]) + " and " + std::to_string(c[1]) + " is inconsistent with the earlier equations";
}

namespace {

bool generated_by(const LieAlgebra& g, const std::vector<RatVec>& gens) {
  const std::size_t n = g.dim();
  std::vector<RatVec> span = span_basis(gens, n);
  std::vector<RatVec> frontier = span;
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& x : gens)
      for (const auto& y : frontier) {
        RatVec z = g.bracket(x, y);
        if (!in_span(span, z, n)) {
          span.push_back(z);
          span = span_basis(span, n);
          next.push_back(z);
        }
      }
    frontier = std::move(next);
  }
  return span.size() == n;
}

}  // namespace

StratificationResult stratification(AlgebraPtr gp) {
  const LieAlgebra& g = *gp;
  const std::size_t n = g.dim();
  LcsData lcs = lcs_adapted(g);
  StratificationResult res;
  res.adapted_basis = lcs.change;
  res.degrees = lcs.degrees;
  const LieAlgebra h = change_basis(g, lcs.change);
  const auto& w = lcs.degrees;

  // unknown a(i,h) for w_h > w_i: delta X_i = w_i X_i + sum a(i,h) X_h
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t hh = 0; hh < n; ++hh)
      if (w[hh] > w[i]) var.emplace(std::make_pair(i, hh), var.size());
  const std::size_t nv = var.size();

  std::vector<RatVec> rows;
  RatVec rhs;
  std::vector<std::array<std::size_t, 3>> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        RatVec row = zero_rat_vec(nv);
        for (std::size_t k = 0; k < n; ++k)
          if (h.c(i, j, k) != 0 && w[l] > w[k]) row[var.at({k, l})] += h.c(i, j, k);
        for (std::size_t m = 0; m < n; ++m) {
          if (w[m] > w[i] && h.c(m, j, l) != 0) row[var.at({i, m})] -= h.c(m, j, l);
          if (w[m] > w[j] && h.c(i, m, l) != 0) row[var.at({j, m})] -= h.c(i, m, l);
        }
        Rat b = h.c(i, j, l) * Rat(static_cast<long>(w[i] + w[j]) - static_cast<long>(w[l]));
        if (is_zero(row) && b == 0) continue;
        rows.push_back(std::move(row));
        rhs.push_back(b);
        labels.push_back({i + 1, j + 1, l + 1});
      }

  Mat a = Mat::from_rows(rows, nv);
  auto sol = solve(a, rhs);
  if (!sol) {
    // first row whose addition makes the prefix inconsistent
    for (std::size_t r = 1; r <= rows.size(); ++r) {
      std::vector<RatVec> pre(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(r));
      RatVec pb(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(r));
      if (!solve(Mat::from_rows(pre, nv), pb)) {
        res.certificate = labels[r - 1];
        break;
      }
    }
    return res;
  }

  Mat delta(n, n);
  for (std::size_t i = 0; i < n; ++i) delta(i, i) = static_cast<long>(w[i]);
  for (const auto& [key, idx] : var) delta(key.second, key.first) = (*sol)[idx];
  LinMap d = lcs.change * delta * *inverse(lcs.change);
  if (!is_derivation(g, d)) throw Error("stratification: assembled map is not a derivation");

  std::vector<Layer> layers;
  std::set<unsigned> degs(w.begin(), w.end());
  for (unsigned s : degs) {
    auto ker = nullspace(d - Rat(static_cast<long>(s)) * Mat::identity(n));
    layers.push_back({IntVec{Int(s)}, ker});
  }
  Grading strat(gp, 1, std::move(layers));
  if (!generated_by(g, strat.layers().front().basis)) throw Error("stratification: first layer does not generate");
  res.stratifiable = true;
  res.grading = std::move(strat);
  res.derivation = std::move(d);
  return res;
}

StratificationResult stratification(const LieAlgebra& g) {
  return stratification(std::make_shared<const LieAlgebra>(g));
}

Cone positive_cone(const Grading& w) {
  std::set<IntVec> rows;
  for (const auto& l : w.layers()) rows.insert(l.weight);
  return {w.rank(), {rows.begin(), rows.end()}};
}

std::optional<RatVec> cone_point(const Cone& c) {
  LinearProgram lp(c.k);
  for (std::size_t j = 0; j < c.k; ++j) lp.set_free(j);
  for (const auto& r : c.rows) lp.add(to_rat(r), Relation::Ge, 1);
  auto res = simplex_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.point;
}

bool cone_is_empty(const Cone& c) { return !cone_point(c).has_value(); }

bool admits_positive_realization(const Grading& v) { return !cone_is_empty(positive_cone(v)); }

namespace {

Int inf_norm(const IntVec& v) {
  Int m = 0;
  for (const auto& x : v) m = std::max(m, Int(abs(x)));
  return m;
}

PositiveRealization finish_realization(const Grading& v, IntVec w) {
  IntMat f(1, v.rank());
  for (std::size_t j = 0; j < v.rank(); ++j) f(0, j) = w[j];
  std::vector<Int> weights;
  Int max_weight = 0;
  std::set<Int> distinct;
  for (const auto& l : v.layers()) {
    Int x = dot(w, l.weight);
    if (x < 1) throw Error("positive realization produced a non-positive weight");
    distinct.insert(x);
    weights.push_back(x);
    max_weight = std::max(max_weight, x);
  }
  if (distinct.size() != weights.size()) throw Error("positive realization merged two layers");
  Grading z = push_forward(v, GroupHom{std::move(f)});
  return {std::move(w), std::move(weights), std::move(max_weight), std::move(z)};
}

}  // namespace

PositiveRealization positive_realization(const Grading& v, RealizationMode mode, std::size_t layer_cap) {
  const std::size_t k = v.rank(), N = v.size();
  auto point = cone_point(positive_cone(v));
  if (!point) throw NoPositiveRealization();

  if (mode == RealizationMode::Fast) {
    // minimize sum <w, alpha_i> subject to <w, alpha_i> >= 1
    LinearProgram lp(k);
    lp.sense = Sense::Minimize;
    for (std::size_t j = 0; j < k; ++j) lp.set_free(j);
    for (const auto& l : v.layers()) {
      lp.add(to_rat(l.weight), Relation::Ge, 1);
      for (std::size_t j = 0; j < k; ++j) lp.objective[j] += l.weight[j];
    }
    auto res = simplex_solve(lp);
    if (res.status != LpStatus::Optimal) throw NoPositiveRealization();
    Int den = common_denominator(res.point);
    Int big_m = 1;
    for (const auto& l : v.layers()) big_m = std::max(big_m, Int(inf_norm(l.weight) + 1));
    for (const auto& a : v.layers())
      for (const auto& b : v.layers()) big_m = std::max(big_m, Int(inf_norm(a.weight - b.weight) + 1));
    Int mk;
    mpz_pow_ui(mk.get_mpz_t(), big_m.get_mpz_t(), k);
    IntVec w(k);
    Int digit = 1;
    for (std::size_t j = 0; j < k; ++j) {
      w[j] = mk * Rat(res.point[j] * den).get_num() + digit;
      digit *= big_m;
    }
    return finish_realization(v, std::move(w));
  }

  if (N > layer_cap)
    throw ProblemTooLarge("optimal positive realization limited to " + std::to_string(layer_cap) + " layers; use fast mode");

  Int big_m = 0;
  for (const auto& a : v.layers()) {
    big_m = std::max(big_m, inf_norm(a.weight));
    for (const auto& b : v.layers()) big_m = std::max(big_m, inf_norm(a.weight - b.weight));
  }
  big_m += 1;
  Int c = 1;
  mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), N + 1);
  c = 3 + Int(static_cast<unsigned long>(N)) * c;
  Int mk;
  mpz_pow_ui(mk.get_mpz_t(), big_m.get_mpz_t(), k);
  c *= mk;
  const Rat C(c);

  // variables: z, w_1..w_k, then b_ij for i < j
  const std::size_t nz = 0, nw = 1, nb = 1 + k;
  const std::size_t pairs = N * (N - 1) / 2;
  IntegerProgram ip{LinearProgram(1 + k + pairs), {}, std::vector<bool>(1 + k + pairs, false)};
  LinearProgram& lp = ip.lp;
  lp.sense = Sense::Minimize;
  lp.objective[nz] = 1;
  lp.lower[nz] = Rat(1);
  lp.upper[nz] = C;

  // box for w: <w, alpha_sel> in [1, C] for k independent weights
  std::vector<RatVec> sel;
  for (const auto& l : v.layers()) {
    sel.push_back(to_rat(l.weight));
    if (rank(Mat::from_rows(sel, k)) < sel.size()) sel.pop_back();
    if (sel.size() == k) break;
  }
  Mat ainv = k > 0 ? *inverse(Mat::from_rows(sel, k)) : Mat(0, 0);
  for (std::size_t j = 0; j < k; ++j) {
    Rat s = 0;
    for (std::size_t l = 0; l < k; ++l) s += abs(ainv(j, l));
    Rat bound(ceil_rat(s * C));
    lp.lower[nw + j] = Rat(-bound);
    lp.upper[nw + j] = bound;
  }
  auto row_for = [&](const IntVec& alpha) {
    RatVec r = zero_rat_vec(lp.num_vars());
    for (std::size_t j = 0; j < k; ++j) r[nw + j] = alpha[j];
    return r;
  };
  for (const auto& l : v.layers()) {
    RatVec r = row_for(l.weight);
    lp.add(r, Relation::Ge, 1);
    for (auto& x : r) x = -x;
    r[nz] = 1;
    lp.add(r, Relation::Ge, 0);
  }
  std::size_t b = nb;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j, ++b) {
      ip.binary[b] = true;
      RatVec r = row_for(v.layers()[i].weight - v.layers()[j].weight);
      r[b] = -(1 + C);
      lp.add(r, Relation::Ge, -C);
      lp.add(r, Relation::Le, -1);
    }
  auto res = ilp_solve(ip);
  if (res.status != IlpStatus::Optimal) throw NoPositiveRealization();
  IntVec w(res.point.begin() + nw, res.point.begin() + nw + static_cast<std::ptrdiff_t>(k));
  auto out = finish_realization(v, std::move(w));
  if (out.max_weight != res.point[nz]) throw Error("positive realization: objective and maximal weight disagree");
  return out;
}

LinMap heintze_derivation(const Grading& v, const RatVec& a) {
  const LieAlgebra& g = v.algebra();
  if (!is_nilpotent(g)) throw NotNilpotent();
  if (a.size() != v.rank()) throw DimensionMismatch("projection length differs from grading rank");
  const std::size_t n = g.dim();
  std::vector<RatVec> cols;
  std::vector<Rat> eig;
  Rat smallest;
  for (const auto& l : v.layers()) {
    Rat x = dot(a, to_rat(l.weight));
    if (x <= 0) throw InvalidGrading("projection is not positive on weight " + to_string(l.weight));
    if (eig.empty() || x < smallest) smallest = x;
    for (const auto& bv : l.basis) {
      cols.push_back(bv);
      eig.push_back(x);
    }
  }
  Mat p = Mat::from_columns(cols, n);
  Mat diag(n, n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = eig[i] / smallest;
  LinMap d = p * diag * *inverse(p);
  if (!is_derivation(g, d)) throw Error("heintze derivation failed the Leibniz check");
  return d;
}

LinMap heintze_derivation(const Grading& v) {
  if (v.rank() != 1) throw InvalidGrading("expected a Z-grading");
  return heintze_derivation(v, RatVec{1});
}

}  // namespace liegrad
