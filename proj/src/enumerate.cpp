#include "liegrad/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "liegrad/errors.hpp"

namespace liegrad {

namespace {

bool in_span_of(const std::vector<LinMap>& basis, const LinMap& m) {
  const std::size_t n = m.rows();
  std::vector<RatVec> flat;
  auto flatten = [n](const LinMap& a) {
    RatVec v;
    v.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(a(r, c));
    return v;
  };
  for (const auto& b : basis) flat.push_back(flatten(b));
  return in_span(flat, flatten(m), n * n);
}

}  // namespace

MaximalTorus maximal_torus(const LieAlgebra& g) {
  auto ptr = std::make_shared<const LieAlgebra>(g);
  const auto der = derivation_algebra(g);
  std::vector<LinMap> torus;
  for (bool extended = true; extended;) {
    extended = false;
    for (const auto& a : centralizer(der, torus)) {
      LinMap s = jordan_decompose(a).semisimple;
      if (s.is_zero() || in_span_of(torus, s)) continue;
      torus.push_back(std::move(s));
      extended = true;
      break;
    }
  }
  Grading grading = universal_realization(induced_grading(ptr, torus));
  return {std::move(torus), std::move(grading)};
}

Grading maximal_grading(const LieAlgebra& g) { return maximal_torus(g).grading; }

Grading maximal_grading(AlgebraPtr g) {
  auto t = maximal_torus(*g);
  std::vector<std::vector<RatVec>> layers;
  for (const auto& l : t.grading.layers()) layers.push_back(l.basis);
  return universal_realization(std::move(g), layers);
}

bool Subgroup::saturated() const {
  for (const auto& d : smith_normal_form(hnf).invariant_factors())
    if (d != 1) return false;
  return true;
}

bool Subgroup::contains(const IntVec& v) const {
  std::vector<IntVec> rows;
  for (std::size_t r = 0; r < hnf.rows(); ++r) rows.push_back(hnf.row(r));
  rows.push_back(v);
  return make_subgroup(ambient_rank, rows).hnf == hnf;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t r = 0; r < a.hnf.rows(); ++r)
    for (std::size_t c = 0; c < a.hnf.cols(); ++c)
      if (a.hnf(r, c) != b.hnf(r, c)) return a.hnf(r, c) < b.hnf(r, c);
  return false;
}

Subgroup make_subgroup(std::size_t ambient_rank, const std::vector<IntVec>& generators) {
  auto h = hermite_normal_form(IntMat::from_rows(generators, ambient_rank));
  IntMat key(h.rank, ambient_rank);
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t c = 0; c < ambient_rank; ++c) key(r, c) = h.H(r, c);
  return {ambient_rank, std::move(key)};
}

GroupHom quotient_map(const Subgroup& l) {
  const std::size_t k = l.ambient_rank, r = l.rank();
  SmithForm snf = smith_normal_form(l.hnf);
  for (const auto& d : snf.invariant_factors())
    if (d != 1) throw TorsionInQuotient("subgroup is not saturated");
  // x -> (x V) restricted to the last k - r coordinates
  IntMat f(k - r, k);
  for (std::size_t q = 0; q < k - r; ++q)
    for (std::size_t j = 0; j < k; ++j) f(q, j) = snf.V(j, r + q);
  return {std::move(f)};
}

std::vector<IntVec> weight_differences(const Grading& w) {
  std::set<IntVec> diffs;
  const auto& ls = w.layers();
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = 0; b < ls.size(); ++b) {
      if (a == b) continue;
      IntVec d = ls[a].weight - ls[b].weight;
      auto first = std::find_if(d.begin(), d.end(), [](const Int& x) { return x != 0; });
      if (first == d.end()) continue;
      if (*first < 0)
        for (auto& x : d) x = -x;
      diffs.insert(std::move(d));
    }
  return {diffs.begin(), diffs.end()};
}

std::vector<Subgroup> difference_subgroups(const Grading& w) {
  const std::size_t k = w.rank();
  const auto diffs = weight_differences(w);
  std::set<Subgroup> seen;
  std::deque<Subgroup> queue;
  Subgroup zero{k, IntMat(0, k)};
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Subgroup l = std::move(queue.front());
    queue.pop_front();
    std::vector<IntVec> rows;
    for (std::size_t r = 0; r < l.rank(); ++r) rows.push_back(l.hnf.row(r));
    for (const auto& d : diffs) {
      rows.push_back(d);
      Subgroup next = make_subgroup(k, rows);
      rows.pop_back();
      if (next == l) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& s : seen)
    if (s.saturated()) out.push_back(s);
  return out;  // std::set order is (rank, HNF)
}

std::vector<Quotient> torsionfree_quotients(const Grading& w, Exec exec) {
  auto subgroups = difference_subgroups(w);
  return ordered_map<Quotient>(
      subgroups.size(),
      [&](std::size_t i) {
        GroupHom f = quotient_map(subgroups[i]);
        Grading q = universal_realization(push_forward(w, f));
        return Quotient{subgroups[i], std::move(f), std::move(q)};
      },
      exec);
}

}  // namespace liegrad
