#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegrad/lie_algebra.hpp"

namespace liegrad {

/// Reference values for one nilpotent Lie algebra of dimension <= 6: rank of
/// the maximal grading, stratifiability, number of torsion-free gradings up
/// to equivalence, and how many of those admit a positive realization.
struct ReferenceRow {
  unsigned maximal_rank;
  bool stratifiable;
  unsigned classes;
  unsigned positive;
};

struct CorpusEntry {
  std::string name;      // canonical, e.g. "L_6_19(-1)"
  std::size_t dim;
  std::string brackets;  // condensed "ab=c" list of the nonabelian factor
  ReferenceRow reference;
};

/// All shipped algebras in table order (dimension, then index).
const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_names();

/// Accepts "L_4_2", "L_{4,2}", "L4,2", "L_6_19(-1)", "L_6_19_-1".
/// Returns the canonical name or nullopt.
std::optional<std::string> canonical_corpus_name(const std::string& name);

/// Throws ParseError for unknown names. Basis labels are Y1..Yn.
LieAlgebra corpus_algebra(const std::string& name);
const CorpusEntry& corpus_entry(const std::string& name);

/// Parses "12=3,13=4" (single-digit 1-based indices, coefficient 1).
LieAlgebra parse_condensed(std::size_t dim, const std::string& text);

}  // namespace liegrad
