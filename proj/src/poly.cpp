#include "liegrad/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "liegrad/errors.hpp"

namespace liegrad {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }
Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  Rat l = leading();
  for (auto& a : p.c_) a /= l;
  return p;
}

Rat Poly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Mat Poly::operator()(const Mat& m) const {
  if (!m.square()) throw DimensionMismatch("polynomial of non-square matrix");
  Mat acc(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + *it * Mat::identity(m.rows());
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Rat a = c_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    bool neg = a < 0;
    Rat mag = neg ? Rat(-a) : a;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty())
      s += liegrad::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += liegrad::to_string(mag) + "*" + mono;
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  const Rat lb = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rat f = rem[k + db] / lb;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divmod(a * b, poly_gcd(a, b)).first.monic();
}

Poly derivative(const Poly& p) {
  if (p.degree() <= 0) return Poly();
  std::vector<Rat> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * p.coeffs()[i];
  return Poly(std::move(d));
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly::constant(1);
  // characteristic zero: p / gcd(p, p') is squarefree with the same roots
  return divmod(p, poly_gcd(p, derivative(p))).first.monic();
}

namespace {

std::vector<Int> positive_divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rat> RootFactorization::distinct() const {
  std::vector<Rat> out;
  for (const auto& [r, m] : roots) out.push_back(r);
  return out;
}

RootFactorization rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RootFactorization f{{}, p};
  if (p.degree() <= 0) return f;
  std::vector<Rat> candidates;
  Poly q = squarefree_part(p);
  if (q.coeff(0) == 0) candidates.emplace_back(0);
  std::size_t shift = 0;
  while (q.coeff(shift) == 0) ++shift;
  q = Poly(std::vector<Rat>(q.coeffs().begin() + static_cast<std::ptrdiff_t>(shift), q.coeffs().end()));
  if (q.degree() >= 1) {
    // primitive integer form: candidates are +-(divisor of a0)/(divisor of an)
    Int den = common_denominator(q.coeffs());
    Int a0 = Rat(q.coeff(0) * den).get_num();
    Int an = Rat(q.leading() * den).get_num();
    for (const auto& num : positive_divisors(a0))
      for (const auto& d : positive_divisors(an))
        for (int sign : {1, -1}) {
          Rat r = make_rat(sign * num, d);
          if (std::find(candidates.begin(), candidates.end(), r) == candidates.end() && q(r) == 0)
            candidates.push_back(r);
        }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& r : candidates) {
    Poly lin({-r, Rat(1)});
    unsigned mult = 0;
    for (;;) {
      auto [quo, rem] = divmod(f.residual, lin);
      if (!rem.is_zero()) break;
      f.residual = quo;
      ++mult;
    }
    f.roots.emplace_back(r, mult);
  }
  return f;
}

}  // namespace liegrad
