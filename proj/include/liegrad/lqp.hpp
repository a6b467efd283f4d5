#pragma once

#include <optional>
#include <vector>

#include "liegrad/grading.hpp"

namespace liegrad {

/// coeff * theta_{i_1} ^ ... ^ theta_{i_h}; indices 0-based, strictly ascending.
struct Monomial {
  std::vector<std::size_t> indices;
  Rat coeff;
};
using Form = std::vector<Monomial>;

struct FormBasis {
  std::size_t degree = 0;
  std::vector<Form> forms;
};

/// Throws ParseError unless every form is nonempty and every monomial has
/// `degree` strictly ascending indices below dim.
void check_form_basis(const FormBasis& b, std::size_t dim);

/// The single constant 0-form.
FormBasis constant_forms();

/// Sum of the layer weights of the indices, common to all monomials.
/// Throws IndexOutOfRange for an index outside the algebra or one whose
/// basis vector does not lie in a single layer, InhomogeneousForm when two
/// monomials disagree (1-based monomial positions).
IntVec form_weight(const Grading& w, const Form& form);

/// Q_a = sum over layers of dim V_alpha * <a, alpha>.
Rat homogeneous_dimension(const Grading& w, const RatVec& a);

struct BoundResult {
  Rat value;
  RatVec maximizer;  // Q_a = 1
  bool attained = false;
};

/// Maximizes (min over E_cur of <a, w(theta)> - max over E_prev of
/// <a, w(theta)>) / Q_a over the closed positivity cone; `attained` reports
/// whether some maximizer lies in the open cone. E_prev defaults to the
/// constant forms. Throws EmptyCone when no a is positive on all weights.
BoundResult optimize_bound(const Grading& w, const std::optional<FormBasis>& prev, const FormBasis& cur);

}  // namespace liegrad
