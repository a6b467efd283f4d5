#pragma once

#include <stdexcept>
#include <string>

namespace liegrad {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text, files or shapes.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A torus element has eigenvalues outside Q; carries the offending minimal
/// polynomial in text form.
class FieldExtensionRequired : public Error {
 public:
  explicit FieldExtensionRequired(std::string minimal_polynomial)
      : Error("field extension required: minimal polynomial " +
              minimal_polynomial + " has non-rational roots"),
        polynomial(std::move(minimal_polynomial)) {}
  std::string polynomial;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("Lie algebra is not nilpotent") {}
};

class NotCommuting : public Error {
 public:
  using Error::Error;
};

class NotSemisimple : public Error {
 public:
  using Error::Error;
};

class NotDirectSum : public Error {
 public:
  using Error::Error;
};

/// Raised when a candidate layer decomposition violates [V_a,V_b] <= V_{a+b}
/// or has repeated weights.
class InvalidGrading : public Error {
 public:
  using Error::Error;
};

class TorsionInQuotient : public Error {
 public:
  using Error::Error;
};

class DifferentAlgebra : public Error {
 public:
  DifferentAlgebra() : Error("gradings are over different algebras") {}
};

class NoPositiveRealization : public Error {
 public:
  NoPositiveRealization() : Error("grading has no positive realization") {}
};

class EmptyCone : public Error {
 public:
  EmptyCone() : Error("positivity cone is empty") {}
};

class InhomogeneousForm : public Error {
 public:
  InhomogeneousForm(std::size_t first, std::size_t second)
      : Error("inhomogeneous form: monomials " + std::to_string(first) +
              " and " + std::to_string(second) + " have different weights"),
        first_monomial(first),
        second_monomial(second) {}
  std::size_t first_monomial;
  std::size_t second_monomial;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Optimal positive realization refused because the ILP would be too large.
class ProblemTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace liegrad
