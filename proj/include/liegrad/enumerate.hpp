#pragma once

#include <vector>

#include "liegrad/grading.hpp"
#include "liegrad/parallel.hpp"

namespace liegrad {

struct MaximalTorus {
  std::vector<LinMap> basis;  // commuting semisimple derivations
  Grading grading;            // universal realization of the induced grading
};

/// Extends a torus one semisimple part at a time: each centralizer basis
/// element's semisimple Jordan part is added when it lies outside the
/// current span, restarting after every extension. Throws
/// FieldExtensionRequired when the torus is not split over Q.
MaximalTorus maximal_torus(const LieAlgebra& g);
Grading maximal_grading(const LieAlgebra& g);
Grading maximal_grading(AlgebraPtr g);

/// Subgroup of Z^k keyed by the nonzero rows of its Hermite normal form.
struct Subgroup {
  std::size_t ambient_rank = 0;
  IntMat hnf;  // rank x ambient_rank
  std::size_t rank() const { return hnf.rows(); }
  /// Torsion-free quotient: all invariant factors are 1.
  bool saturated() const;
  bool contains(const IntVec& v) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.hnf == b.hnf; }
  /// Order by rank, then by HNF entries.
  friend bool operator<(const Subgroup& a, const Subgroup& b);
};
Subgroup make_subgroup(std::size_t ambient_rank, const std::vector<IntVec>& generators);

/// Projection Z^k -> Z^k / L ~ Z^{k-r} for a saturated L of rank r.
GroupHom quotient_map(const Subgroup& l);

struct Quotient {
  Subgroup subgroup;
  GroupHom projection;
  Grading grading;  // universal realization of the push-forward
};

/// Sign-normalized nonzero differences of weights, deduplicated and sorted.
std::vector<IntVec> weight_differences(const Grading& w);

/// Every saturated subgroup spanned by a set of weight differences.
std::vector<Subgroup> difference_subgroups(const Grading& w);

/// One entry per saturated subgroup spanned by weight differences
/// (including the zero subgroup), ordered by rank then HNF.
std::vector<Quotient> torsionfree_quotients(const Grading& w, Exec exec = Exec::Parallel);

}  // namespace liegrad
