#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegrad/grading.hpp"

namespace liegrad {

struct EquivalenceResult {
  enum class Kind { Equivalent, Distinguished, Undecided };
  Kind kind = Kind::Undecided;
  /// Equivalent: W = f_* Phi(V), both verified exactly.
  std::optional<GroupHom> f;
  std::optional<LinMap> phi;
  /// Distinguished: which invariant separates the gradings.
  std::string reason;
  /// Undecided: the layer-matching isomorphisms with no monomial witness.
  std::vector<GroupHom> candidates;
};

/// Group isomorphisms Z^k -> Z^k sending the weights of v bijectively onto
/// the weights of w with equal layer dimensions. v and w must be universal
/// realizations.
std::vector<GroupHom> matching_isomorphisms(const Grading& v, const Grading& w);

/// Searches for f and an automorphism Phi with Phi(V_a) = W_{f(a)}. Phi is
/// sought among maps sending a layer-adapted basis vector to a multiple of
/// another; the adapted bases split each layer along `refinement` (usually
/// the maximal grading both gradings were pushed forward from) when given,
/// otherwise they are the layer bases themselves.
EquivalenceResult find_equivalence(const Grading& v, const Grading& w,
                                   const std::optional<Grading>& refinement = std::nullopt);

}  // namespace liegrad
