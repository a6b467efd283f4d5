// Independent reference computations shared by the tests and the
// acceptance binary.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "liegrad/grading.hpp"
#include "liegrad/intmat.hpp"
#include "liegrad/lp.hpp"

namespace oracle {

using namespace liegrad;

// gcd of all k x k minors, computed by brute force over index subsets.
inline Int determinantal_divisor(const IntMat& m, std::size_t k) {
  std::vector<std::size_t> rows(k), cols(k);
  Int g = 0;
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) {
      rows[at] = r;
      pick_rows(at + 1, r + 1);
    }
  };
  pick_cols = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      IntMat sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rows[a], cols[b]);
      Int d = determinant(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) {
      cols[at] = c;
      pick_cols(at + 1, c + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

inline IntMat random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) {
      u.swap_rows(a, (a + 1) % n);
    } else {
      u.add_row(a, b, f(rng));
    }
  }
  return u;
}

// Optimum of an integer program by walking the box [-box, box]^n.
inline std::optional<Rat> exhaustive_ilp(const LinearProgram& lp, int box) {
  const std::size_t n = lp.num_vars();
  std::optional<Rat> best;
  IntVec x(n, Int(-box));
  for (;;) {
    RatVec xr = to_rat(x);
    if (is_feasible(lp, xr)) {
      Rat v = objective_value(lp, xr);
      if (!best || (lp.sense == Sense::Maximize ? v > *best : v < *best)) best = v;
    }
    std::size_t j = 0;
    while (j < n && x[j] == box) x[j++] = -box;
    if (j == n) break;
    ++x[j];
  }
  return best;
}

// Lattice key: nonzero rows of the Hermite form.
inline std::vector<IntVec> lattice_key(const std::vector<IntVec>& gens, std::size_t k) {
  if (gens.empty()) return {};
  HermiteForm h = hermite_normal_form(IntMat::from_rows(gens, k));
  std::vector<IntVec> rows;
  for (std::size_t r = 0; r < h.rank; ++r) rows.push_back(h.H.row(r));
  return rows;
}

// gcd of the maximal minors of the rows (determinantal divisor).
inline Int maximal_minor_gcd(const std::vector<IntVec>& rows, std::size_t k) {
  const std::size_t r = rows.size();
  if (r == 0) return 1;
  Int g = 0;
  std::vector<std::size_t> cols;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cols.size() == r) {
      IntMat m(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m(i, j) = rows[i][cols[j]];
      Int d = determinant(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = start; c < k; ++c) {
      cols.push_back(c);
      rec(c + 1);
      cols.pop_back();
    }
  };
  rec(0);
  return g;
}

// Every subset of the sign-normalized weight differences, closed under
// span, keeping the lattices with torsion-free quotient.
inline std::set<std::vector<IntVec>> saturated_difference_lattices(const Grading& w) {
  const std::size_t k = w.rank();
  std::set<IntVec> diffs;
  for (const auto& a : w.layers())
    for (const auto& b : w.layers()) {
      if (a.weight == b.weight) continue;
      IntVec d = a.weight - b.weight;
      auto lead = std::find_if(d.begin(), d.end(), [](const Int& x) { return x != 0; });
      if (*lead < 0)
        for (auto& y : d) y = -y;
      diffs.insert(d);
    }
  std::vector<IntVec> ds(diffs.begin(), diffs.end());
  std::set<std::vector<IntVec>> all;
  std::function<void(std::size_t, const std::vector<IntVec>&)> rec = [&](std::size_t i,
                                                                        const std::vector<IntVec>& key) {
    if (i == ds.size()) {
      all.insert(key);
      return;
    }
    rec(i + 1, key);
    std::vector<IntVec> gens = key;
    gens.push_back(ds[i]);
    rec(i + 1, lattice_key(gens, k));
  };
  rec(0, {});
  std::set<std::vector<IntVec>> saturated;
  for (const auto& key : all)
    if (maximal_minor_gcd(key, k) == 1) saturated.insert(key);
  return saturated;
}

// Smallest possible largest weight over w in [-bound, bound]^k with all
// <w, alpha> >= 1 and pairwise distinct.
inline std::optional<Int> best_positive_projection(const Grading& v, long bound) {
  const std::size_t k = v.rank();
  std::optional<Int> best;
  IntVec w(k);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == k) {
      std::vector<Int> vals;
      for (const auto& l : v.layers()) {
        Int x = dot(w, l.weight);
        if (x < 1) return;
        vals.push_back(x);
      }
      std::sort(vals.begin(), vals.end());
      if (std::adjacent_find(vals.begin(), vals.end()) != vals.end()) return;
      if (!best || vals.back() < *best) best = vals.back();
      return;
    }
    for (long x = -bound; x <= bound; ++x) {
      w[j] = x;
      rec(j + 1);
    }
  };
  rec(0);
  return best;
}

inline Grading apply_automorphism(const Grading& v, const LinMap& phi) {
  std::vector<Layer> layers;
  for (const auto& l : v.layers()) {
    Layer m{l.weight, {}};
    for (const auto& b : l.basis) m.basis.push_back(phi * b);
    layers.push_back(std::move(m));
  }
  return Grading(v.algebra_ptr(), v.rank(), std::move(layers));
}

// W = f_* Phi(V), checked from scratch.
inline bool witness_holds(const Grading& v, const Grading& w, const GroupHom& f, const LinMap& phi) {
  if (!is_automorphism(v.algebra(), phi)) return false;
  if (f.matrix.rows() != w.rank() || f.matrix.cols() != v.rank()) return false;
  Int d = determinant(f.matrix);
  if (d != 1 && d != -1) return false;
  return push_forward(apply_automorphism(v, phi), f) == w;
}

// V_1 generates g as a Lie algebra.
inline bool generates(const LieAlgebra& g, const std::vector<RatVec>& v1) {
  std::vector<RatVec> span = v1, frontier = v1;
  const std::size_t n = g.dim();
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& x : v1)
      for (const auto& y : frontier) {
        RatVec z = g.bracket(x, y);
        if (!in_span(span, z, n)) {
          span.push_back(z);
          next.push_back(z);
        }
      }
    frontier = next;
  }
  return span.size() == n;
}

// Layers of the L_4_2 table of equivalence classes, as 0-based basis index sets.
inline const std::vector<std::vector<std::vector<std::size_t>>>& l42_class_table() {
  static const std::vector<std::vector<std::vector<std::size_t>>> t{
      {{0}, {1}, {2}, {3}},  {{1}, {3}, {0, 2}}, {{3}, {0, 1}, {2}}, {{0, 3}, {1}, {2}},
      {{0}, {1}, {2, 3}},    {{0, 3}, {1, 2}},   {{0, 1}, {2, 3}},  {{0, 1, 3}, {2}},
      {{0, 1, 2}, {3}},      {{0}, {1, 2, 3}},   {{0, 1, 2, 3}}};
  return t;
}

inline Grading grading_from_index_sets(const AlgebraPtr& g, const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::vector<RatVec>> layers;
  for (const auto& s : sets) {
    std::vector<RatVec> b;
    for (std::size_t i : s) b.push_back(unit_rat_vec(g->dim(), i));
    layers.push_back(b);
  }
  return universal_realization(g, layers);
}

}  // namespace oracle
