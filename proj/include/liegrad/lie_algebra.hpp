#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liegrad/matrix.hpp"
#include "liegrad/poly.hpp"
#include "liegrad/rational.hpp"

namespace liegrad {

/// Linear endomorphism acting on column coordinate vectors.
using LinMap = Mat;

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k (0-based indices).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : n_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return n_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  Rat& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const RatVec& value);
  /// [e_i, e_j] as a coordinate vector.
  RatVec bracket_basis(std::size_t i, std::size_t j) const;
  RatVec bracket(const RatVec& x, const RatVec& y) const;
  /// Matrix of y -> [x, y].
  LinMap ad(const RatVec& x) const;

  bool is_abelian() const;

  std::string name;
  std::vector<std::string> labels;  // empty means X1..Xn
  std::string label(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rat> c_;
};

/// Sparse bracket description, 0-based: [e_i, e_j] += coeff * e_k.
struct BracketTerm {
  std::size_t i, j, k;
  Rat coeff;
};
/// Builds an algebra from brackets with i != j; antisymmetry is implied.
LieAlgebra algebra_from_brackets(std::size_t dim, const std::vector<BracketTerm>& terms);

struct Validation {
  enum class Kind { Ok, Antisymmetry, Jacobi };
  Kind kind = Kind::Ok;
  std::vector<std::size_t> witness;  // 0-based (i,j) or (i,j,k,l)
  bool ok() const { return kind == Kind::Ok; }
  std::string describe() const;  // 1-based indices
};
Validation validate(const LieAlgebra& g);

/// Basis of der(g) from the nullspace of the Leibniz system with unknown
/// matrix entries ordered row-major.
std::vector<LinMap> derivation_algebra(const LieAlgebra& g);
bool is_derivation(const LieAlgebra& g, const LinMap& d);
bool is_automorphism(const LieAlgebra& g, const LinMap& phi);

/// Basis of {A in span(ambient) : A B = B A for all B in bs}.
std::vector<LinMap> centralizer(const std::vector<LinMap>& ambient, const std::vector<LinMap>& bs);

/// Minimal polynomial (monic) via Krylov sequences of e_1, e_2, ...
Poly minimal_polynomial(const LinMap& a);
bool is_semisimple(const LinMap& a);
bool is_nilpotent_map(const LinMap& a);

struct JordanParts {
  LinMap semisimple, nilpotent;
};
/// A = S + N over Q with S semisimple, N nilpotent, SN = NS.
JordanParts jordan_decompose(const LinMap& a);

struct LcsData {
  /// terms[0] = g, terms[i] = [g, terms[i-1]], RREF bases; ends with the
  /// first repeated or zero term (the zero term is stored as empty).
  std::vector<std::vector<RatVec>> terms;
  /// Columns are the adapted basis vectors in original coordinates; each
  /// nonzero term is spanned by a tail of the columns.
  LinMap change;
  std::vector<unsigned> degrees;  // per adapted basis vector
  bool nilpotent = false;
};
/// Lower central series with an adapted basis. Throws NotNilpotent when
/// `require_nilpotent` and the series stalls at a nonzero term.
LcsData lcs_adapted(const LieAlgebra& g, bool require_nilpotent = true);
bool is_nilpotent(const LieAlgebra& g);

/// The same algebra written in the basis given by the columns of `p`
/// (which must be invertible).
LieAlgebra change_basis(const LieAlgebra& g, const LinMap& p);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// The subalgebra spanned by `basis` (assumed closed under brackets),
/// written in that basis.
LieAlgebra restrict_to_subalgebra(const LieAlgebra& g, const std::vector<RatVec>& basis);

}  // namespace liegrad
