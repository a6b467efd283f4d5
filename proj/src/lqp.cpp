#include "liegrad/lqp.hpp"

#include "liegrad/errors.hpp"
#include "liegrad/lp.hpp"
#include "liegrad/positive.hpp"

namespace liegrad {

void check_form_basis(const FormBasis& b, std::size_t dim) {
  for (std::size_t f = 0; f < b.forms.size(); ++f) {
    if (b.forms[f].empty()) throw ParseError("form " + std::to_string(f + 1) + " has no monomials");
    for (const auto& m : b.forms[f]) {
      if (m.indices.size() != b.degree)
        throw ParseError("form " + std::to_string(f + 1) + " has a monomial of the wrong degree");
      for (std::size_t i = 0; i < m.indices.size(); ++i) {
        if (m.indices[i] >= dim) throw ParseError("form index out of range in form " + std::to_string(f + 1));
        if (i > 0 && m.indices[i - 1] >= m.indices[i])
          throw ParseError("form indices not strictly ascending in form " + std::to_string(f + 1));
      }
    }
  }
}

FormBasis constant_forms() { return {0, {{Monomial{{}, Rat(1)}}}}; }

IntVec form_weight(const Grading& w, const Form& form) {
  std::optional<IntVec> common;
  std::size_t first = 0;
  for (std::size_t m = 0; m < form.size(); ++m) {
    IntVec total = zero_int_vec(w.rank());
    for (std::size_t i : form[m].indices) {
      if (i >= w.algebra().dim()) throw IndexOutOfRange("form index " + std::to_string(i + 1) + " out of range");
      auto layer = w.layer_of_basis_vector(i);
      if (!layer)
        throw IndexOutOfRange("basis vector " + std::to_string(i + 1) + " does not lie in a single layer");
      total = total + w.layers()[*layer].weight;
    }
    if (!common) {
      common = std::move(total);
      first = m;
    } else if (total != *common) {
      throw InhomogeneousForm(first + 1, m + 1);
    }
  }
  if (!common) throw ParseError("empty form");
  return *common;
}

Rat homogeneous_dimension(const Grading& w, const RatVec& a) {
  Rat q = 0;
  for (const auto& l : w.layers()) q += Rat(static_cast<long>(l.basis.size())) * dot(a, to_rat(l.weight));
  return q;
}

BoundResult optimize_bound(const Grading& w, const std::optional<FormBasis>& prev, const FormBasis& cur) {
  const std::size_t k = w.rank();
  if (!admits_positive_realization(w)) throw EmptyCone();
  if (cur.forms.empty()) throw ParseError("no forms of the current degree");
  const FormBasis& before = prev ? *prev : constant_forms();
  if (before.forms.empty()) throw ParseError("no forms of the previous degree");

  // variables: a_1..a_k, x, y, and t for the second stage
  const std::size_t nx = k, ny = k + 1, nt = k + 2;
  LinearProgram lp(k + 3);
  for (std::size_t j = 0; j < k + 3; ++j) lp.set_free(j);
  auto weight_row = [&](const IntVec& alpha) {
    RatVec r = zero_rat_vec(k + 3);
    for (std::size_t j = 0; j < k; ++j) r[j] = alpha[j];
    return r;
  };
  for (const auto& f : cur.forms) {
    RatVec r = weight_row(form_weight(w, f));  // <a, w> - x >= 0
    r[nx] = -1;
    lp.add(r, Relation::Ge, 0);
  }
  for (const auto& f : before.forms) {
    RatVec r = weight_row(form_weight(w, f));  // <a, w> - y <= 0
    r[ny] = -1;
    lp.add(r, Relation::Le, 0);
  }
  RatVec q = zero_rat_vec(k + 3);
  for (const auto& l : w.layers())
    for (std::size_t j = 0; j < k; ++j) q[j] += Rat(static_cast<long>(l.basis.size())) * l.weight[j];
  lp.add(q, Relation::Eq, 1);
  for (const auto& l : w.layers()) lp.add(weight_row(l.weight), Relation::Ge, 0);
  lp.lower[nt] = Rat(0);
  lp.upper[nt] = Rat(0);

  lp.sense = Sense::Maximize;
  lp.objective = zero_rat_vec(k + 3);
  lp.objective[nx] = 1;
  lp.objective[ny] = -1;
  auto first = simplex_solve(lp);
  if (first.status != LpStatus::Optimal) throw Error("bound LP is " + std::string(first.status == LpStatus::Unbounded ? "unbounded" : "infeasible"));

  // second stage: on the optimal face, push a into the open cone
  RatVec face = zero_rat_vec(k + 3);
  face[nx] = 1;
  face[ny] = -1;
  lp.add(face, Relation::Eq, first.value);
  for (const auto& l : w.layers()) {
    RatVec r = weight_row(l.weight);
    r[nt] = -1;
    lp.add(r, Relation::Ge, 0);
  }
  lp.lower[nt] = std::nullopt;
  lp.upper[nt] = Rat(1);
  lp.objective = zero_rat_vec(k + 3);
  lp.objective[nt] = 1;
  auto second = simplex_solve(lp);
  if (second.status != LpStatus::Optimal) throw Error("bound LP lost feasibility on its optimal face");

  BoundResult res;
  res.value = first.value;
  res.maximizer.assign(second.point.begin(), second.point.begin() + static_cast<std::ptrdiff_t>(k));
  res.attained = second.value > 0;
  return res;
}

}  // namespace liegrad
