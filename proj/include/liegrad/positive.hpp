#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "liegrad/grading.hpp"

namespace liegrad {

struct StratificationResult {
  bool stratifiable = false;
  std::optional<Grading> grading;  // Z-grading with weights 1..s
  std::optional<LinMap> derivation;  // acts as i on the weight-i layer
  /// When not stratifiable: the (i, j, l) equation, 1-based in the adapted
  /// basis, whose addition first made the system inconsistent. The equation
  /// is the X_l component of delta[X_i, X_j] = [delta X_i, X_j] + [X_i, delta X_j].
  std::optional<std::array<std::size_t, 3>> certificate;
  LinMap adapted_basis;  // columns, original coordinates
  std::vector<unsigned> degrees;
  std::string describe_certificate() const;
};

/// Throws NotNilpotent.
StratificationResult stratification(const LieAlgebra& g);
StratificationResult stratification(AlgebraPtr g);

/// {a : <a, n> > 0 for every weight n}.
struct Cone {
  std::size_t k = 0;
  std::vector<IntVec> rows;
};
Cone positive_cone(const Grading& w);
/// A point with <a, n> >= 1 for all rows, or nullopt when the cone is empty.
std::optional<RatVec> cone_point(const Cone& c);
bool cone_is_empty(const Cone& c);
bool admits_positive_realization(const Grading& v);

enum class RealizationMode { Optimal, Fast };

struct PositiveRealization {
  IntVec w;                 // projection Z^k -> Z
  std::vector<Int> weights; // <w, alpha> per layer of the source grading
  Int max_weight;
  Grading grading;          // the pushed-forward Z-grading
};

/// Layer count above which Optimal mode refuses.
inline constexpr std::size_t kOptimalLayerCap = 20;

/// Throws NoPositiveRealization when 0 is in the convex hull of the weights,
/// and ProblemTooLarge in Optimal mode beyond kOptimalLayerCap layers.
PositiveRealization positive_realization(const Grading& v, RealizationMode mode,
                                         std::size_t layer_cap = kOptimalLayerCap);

/// Derivation acting on each layer by <a, weight>, scaled so the smallest
/// eigenvalue is 1. Requires every <a, weight> > 0 (InvalidGrading
/// otherwise) and g nilpotent (NotNilpotent).
LinMap heintze_derivation(const Grading& v, const RatVec& a);
/// For a Z-grading with positive weights.
LinMap heintze_derivation(const Grading& v);

}  // namespace liegrad
