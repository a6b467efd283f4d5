#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "liegrad/intmat.hpp"
#include "liegrad/lie_algebra.hpp"

namespace liegrad {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct Layer {
  IntVec weight;
  std::vector<RatVec> basis;  // RREF rows, in input coordinates
};

/// A Z^k-grading of a Lie algebra. Constructing one checks that the layers
/// form a direct sum decomposition (NotDirectSum), that weights are distinct
/// and of length k, and that [V_a, V_b] lies in V_{a+b} (InvalidGrading).
/// Layers are kept sorted lexicographically by weight with RREF bases.
class Grading {
 public:
  Grading(AlgebraPtr algebra, std::size_t rank, std::vector<Layer> layers);

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }

  /// Index of the layer with this weight.
  std::optional<std::size_t> find(const IntVec& weight) const;
  /// Index of the layer containing basis vector e_i, if any.
  std::optional<std::size_t> layer_of_basis_vector(std::size_t i) const;
  /// Weight matrix with one row per layer.
  std::vector<IntVec> weights() const;

  friend bool operator==(const Grading& a, const Grading& b);

 private:
  AlgebraPtr algebra_;
  std::size_t rank_;
  std::vector<Layer> layers_;
};

/// Same subspaces, ignoring the weights.
bool same_layers(const Grading& a, const Grading& b);

struct GradingCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // layer indices
};
/// Checks [V_a, V_b] <= V_{a+b} for candidate layers (weights as given).
/// Throws NotDirectSum when the layers do not decompose g.
GradingCheck is_grading(const LieAlgebra& g, const std::vector<Layer>& layers);

struct EigenLayer {
  RatVec eigenvalues;
  std::vector<RatVec> basis;
};

/// Simultaneous eigenspace decomposition of a split torus.
struct EigenGrading {
  AlgebraPtr algebra;
  std::vector<LinMap> torus;
  std::vector<EigenLayer> layers;  // sorted by eigenvalue tuple
};

/// Throws NotCommuting, NotSemisimple, or FieldExtensionRequired with the
/// minimal polynomial of the first torus element that is not split over Q.
EigenGrading induced_grading(AlgebraPtr g, const std::vector<LinMap>& torus);

/// Hom Z^k -> Z^m as an m x k matrix acting on column weights.
struct GroupHom {
  IntMat matrix;
  IntVec apply(const IntVec& w) const { return matrix * w; }
};

/// Universal realization over Z^k. Coordinates are normalized so the k x N
/// weight matrix, with layers ordered by the pivot of their first basis
/// vector, is in Hermite normal form; the result is therefore canonical.
Grading universal_realization(const Grading& v);
Grading universal_realization(const EigenGrading& v);
/// Universal realization of a bare layer decomposition.
Grading universal_realization(AlgebraPtr g, const std::vector<std::vector<RatVec>>& layers);

/// f_* V, merging layers whose weights collide.
Grading push_forward(const Grading& v, const GroupHom& f);

struct RankType {
  std::size_t rank;
  std::vector<unsigned> type;  // type[d-1] = number of d-dimensional layers
  friend bool operator==(const RankType&, const RankType&) = default;
  friend auto operator<=>(const RankType&, const RankType&) = default;
};
RankType rank_and_type(const Grading& v);

struct ProductSplit {
  /// Layer index sets of the connected components of the weight graph;
  /// a single part means no split.
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::vector<RatVec>> ideals;  // basis of each part's ideal
  bool split() const { return parts.size() >= 2; }
};
ProductSplit detect_product(const Grading& v);

}  // namespace liegrad
