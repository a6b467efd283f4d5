#pragma once

#include <json.hpp>
#include <string>

#include "liegrad/classify.hpp"
#include "liegrad/lqp.hpp"
#include "liegrad/positive.hpp"

namespace liegrad {

using json = nlohmann::json;

/// {"name","dim","labels"?,"brackets":[{"i","j","terms":[{"k","coeff"}]}]},
/// 1-based, only i < j. Throws ParseError; does not check the Jacobi identity.
LieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const LieAlgebra& g);
/// Canonical text: two-space indent, sorted keys, trailing newline.
std::string dump_algebra(const LieAlgebra& g);

std::string read_file(const std::string& path);
/// "corpus:NAME" or a path to an algebra file.
LieAlgebra load_algebra(const std::string& arg);

json grading_to_json(const Grading& v);
Grading grading_from_json(const json& j, AlgebraPtr g);

/// {"degree","forms":[[{"indices" (1-based),"coeff"}]]}.
FormBasis form_basis_from_json(const json& j, std::size_t dim);
json form_basis_to_json(const FormBasis& b);

json matrix_to_json(const Mat& m);
json classification_to_json(const std::string& name, const Classification& c);
json stratification_to_json(const StratificationResult& s);
json realization_to_json(const PositiveRealization& r);
json bound_to_json(const BoundResult& b);

/// "Y1 + 2 Y3 - 1/2 Y4".
std::string format_vector(const LieAlgebra& g, const RatVec& v);
/// One line per layer: "V_(1,0,0) = <Y1>".
std::string format_grading(const Grading& v);
std::string format_matrix(const Mat& m);

}  // namespace liegrad
