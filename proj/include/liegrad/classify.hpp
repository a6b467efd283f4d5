#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegrad/enumerate.hpp"
#include "liegrad/equivalence.hpp"

namespace liegrad {

enum class ClassStatus {
  Representative,  // proven inequivalent to every earlier class
  EquivalentTo,    // proven equivalent to `representative`
  Undecided,       // kept as a class; some earlier class could not be ruled out
};

struct ClassifiedGrading {
  Grading grading;
  Subgroup subgroup;
  ClassStatus status = ClassStatus::Representative;
  /// Index into Classification::gradings; self for classes.
  std::size_t representative = 0;
  std::size_t family = 0;
  /// Witness for EquivalentTo: this grading = f_* Phi(representative).
  std::optional<GroupHom> f;
  std::optional<LinMap> phi;
  bool positive = false;
};

struct UndecidedPair {
  std::size_t first;   // earlier class
  std::size_t second;  // grading kept as its own class
  std::size_t candidates;
};

struct ClassificationCounts {
  std::size_t quotients = 0;
  /// Groups of gradings sharing rank, type and a layer-matching isomorphism
  /// (transitively); a lower bound on the number of classes.
  std::size_t families = 0;
  /// Representatives plus undecided gradings; an upper bound.
  std::size_t classes = 0;
  std::size_t undecided = 0;  // undecided pairs
  std::size_t positive = 0;   // classes admitting a positive realization
};

struct Classification {
  Grading maximal;
  std::vector<ClassifiedGrading> gradings;  // in quotient order
  std::vector<UndecidedPair> undecided;
  ClassificationCounts counts;
  /// Indices of the gradings that are classes, ascending.
  std::vector<std::size_t> classes() const;
};

Classification classify_gradings(const Grading& maximal, Exec exec = Exec::Parallel);
Classification classify_gradings(const LieAlgebra& g, Exec exec = Exec::Parallel);

std::string to_string(ClassStatus s);

}  // namespace liegrad
