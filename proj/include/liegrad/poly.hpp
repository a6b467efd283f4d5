#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liegrad/matrix.hpp"
#include "liegrad/rational.hpp"

namespace liegrad {

/// Univariate polynomial over Q, coefficients stored lowest degree first and
/// trimmed so the leading coefficient is nonzero (zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();  // the monomial t

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Poly monic() const;
  Rat operator()(const Rat& t) const;
  /// Evaluates at a square matrix (Horner).
  Mat operator()(const Mat& m) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;

  /// "t^3 - 2*t + 1/2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws std::domain_error when b is zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
Poly poly_lcm(const Poly& a, const Poly& b);  // monic
Poly derivative(const Poly& p);
/// Product of the distinct monic irreducible factors.
Poly squarefree_part(const Poly& p);

/// p = residual * prod (t - root)^multiplicity with residual free of
/// rational roots. Roots are ascending.
struct RootFactorization {
  std::vector<std::pair<Rat, unsigned>> roots;
  Poly residual;
  std::vector<Rat> distinct() const;
};
/// Throws std::domain_error for the zero polynomial.
RootFactorization rational_roots(const Poly& p);

}  // namespace liegrad
