#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "liegrad/errors.hpp"
#include "liegrad/intmat.hpp"
#include "liegrad/lp.hpp"
#include "liegrad/matrix.hpp"
#include "liegrad/poly.hpp"
#include "oracles.hpp"

using namespace liegrad;

namespace {

IntMat random_intmat(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-3")) == "-3");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(ceil_rat(make_rat(-7, 2)) == -3);
}

TEST_CASE("smith normal form small cases") {
  auto id = smith_normal_form(IntMat::identity(2));
  CHECK(id.S == IntMat::identity(2));
  CHECK(id.U == IntMat::identity(2));
  CHECK(id.V == IntMat::identity(2));

  auto z = smith_normal_form(IntMat(1, 1));
  CHECK(z.S == IntMat(1, 1));

  auto f = smith_normal_form(IntMat::from_rows({{2, 4}, {6, 8}}, 2));
  CHECK(f.S == IntMat::from_rows({{2, 0}, {0, 4}}, 2));
}

TEST_CASE("smith normal form matches determinantal divisors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMat m = random_intmat(rng, r, c, -6, 6);
    auto f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.S);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(f.S(i, j) == 0);
    // d_1 ... d_k = gcd of k-minors
    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= f.S(k - 1, k - 1);
      CHECK(f.S(k - 1, k - 1) >= 0);
      if (k >= 2 && f.S(k - 2, k - 2) != 0) CHECK(f.S(k - 1, k - 1) % f.S(k - 2, k - 2) == 0);
      CHECK(prod == oracle::determinantal_divisor(m, k));
    }
  }
}

TEST_CASE("hermite normal form canonical on lattices") {
  CHECK(hermite_normal_form(IntMat::identity(3)).H == IntMat::identity(3));
  auto g = hermite_normal_form(IntMat::from_rows({{2}, {3}}, 1));
  CHECK(g.H == IntMat::from_rows({{1}, {0}}, 1));
  auto a = hermite_normal_form(IntMat::from_rows({{1, -1, 0}, {0, 1, -1}}, 3));
  auto b = hermite_normal_form(IntMat::from_rows({{1, 0, -1}, {0, 1, -1}}, 3));
  CHECK(a.H == b.H);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 5;
    IntMat m = random_intmat(rng, r, c, -5, 5);
    auto h = hermite_normal_form(m);
    CHECK(h.U * m == h.H);
    CHECK(abs(determinant(h.U)) == 1);
    auto h2 = hermite_normal_form(oracle::random_unimodular(rng, r) * m);
    CHECK(h2.H == h.H);
    // shape: pivots positive, entries above reduced, zero rows last
    std::size_t last_pivot = 0;
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t p = 0;
      while (p < c && h.H(i, p) == 0) ++p;
      if (i >= h.rank) {
        CHECK(p == c);
        continue;
      }
      REQUIRE(p < c);
      if (i > 0) CHECK(p > last_pivot);
      last_pivot = p;
      CHECK(h.H(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.H(k, p) >= 0);
        CHECK(h.H(k, p) < h.H(i, p));
      }
    }
  }
}

TEST_CASE("nullspace basis and rank-nullity") {
  CHECK(nullspace(Mat::identity(3)).empty());
  auto ns = nullspace(Mat::from_rows({{1, 1}}, 2));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RatVec{-1, 1});

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    // rank-3 4x6 matrix as a product of random 4x3 and 3x6 factors
    Mat a(4, 3), b(3, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = d(rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 6; ++j) b(i, j) = d(rng);
    Mat m = a * b;
    auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == 6);
    for (const auto& x : basis) CHECK(is_zero(m * x));
    if (basis.size() > 0) CHECK(rank(Mat::from_rows(basis, 6)) == basis.size());
  }
}

TEST_CASE("matrix inverse and determinant") {
  Mat m = Mat::from_rows({{2, 1}, {1, 1}}, 2);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Mat::identity(2));
  CHECK(determinant(m) == 1);
  CHECK_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}}, 2)));
}

TEST_CASE("span intersection") {
  std::vector<RatVec> a{{1, 0, 0}, {0, 1, 0}};
  std::vector<RatVec> b{{0, 1, 0}, {0, 0, 1}};
  auto i = intersect_spans(a, b, 3);
  REQUIRE(i.size() == 1);
  CHECK(i[0] == RatVec{0, 1, 0});
}

TEST_CASE("polynomial roots") {
  auto f = rational_roots(Poly({-1, 0, 1}));
  CHECK(f.distinct() == std::vector<Rat>{-1, 1});
  CHECK(f.residual == Poly::constant(1));

  auto g = rational_roots(Poly({-2, 0, 1}));
  CHECK(g.roots.empty());
  CHECK(g.residual == Poly({-2, 0, 1}));

  auto h = rational_roots(Poly({2, -1, -2, 1}));
  CHECK(h.distinct() == std::vector<Rat>{-1, 1, 2});
  CHECK(h.residual == Poly::constant(1));

  // (2t - 1)^2 (t + 3) (t^2 + 1) re-expanded
  Poly p = Poly({-1, 2}) * Poly({-1, 2}) * Poly({3, 1}) * Poly({1, 0, 1});
  auto k = rational_roots(p);
  REQUIRE(k.roots.size() == 2);
  CHECK(k.roots[0] == std::make_pair(Rat(-3), 1u));
  CHECK(k.roots[1] == std::make_pair(make_rat(1, 2), 2u));
  Poly back = k.residual;
  for (auto [r, m] : k.roots)
    for (unsigned i = 0; i < m; ++i) back = back * Poly({-r, Rat(1)});
  CHECK(back == p);

  CHECK(squarefree_part(p) == (Poly({-1, 2}) * Poly({3, 1}) * Poly({1, 0, 1})).monic());
  CHECK(Poly({-2, 0, 1}).to_string() == "t^2 - 2");
}

TEST_CASE("polynomial evaluation at a matrix") {
  Mat m = Mat::from_rows({{0, 1}, {0, 0}}, 2);
  CHECK(Poly({0, 0, 1})(m).is_zero());
  CHECK(Poly({1, 1})(m) == Mat::from_rows({{1, 1}, {0, 1}}, 2));
}

TEST_CASE("simplex small programs") {
  LinearProgram lp(1);
  lp.objective = {1};
  lp.add({1}, Relation::Le, 3);
  auto r = simplex_solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 3);
  CHECK(r.point == RatVec{3});
  CHECK(r.certificate_ok());

  LinearProgram bad(1);
  bad.objective = {1};
  bad.add({1}, Relation::Le, -1);
  CHECK(simplex_solve(bad).status == LpStatus::Infeasible);

  LinearProgram unb(2);
  unb.objective = {1, 1};
  unb.add({1, -1}, Relation::Le, 1);
  CHECK(simplex_solve(unb).status == LpStatus::Unbounded);

  // free variables and equalities: min x + y s.t. x - y = 1/2, x >= -2
  LinearProgram fr(2);
  fr.sense = Sense::Minimize;
  fr.objective = {1, 1};
  fr.set_free(0);
  fr.set_free(1);
  fr.add({1, -1}, Relation::Eq, make_rat(1, 2));
  fr.add({1, 0}, Relation::Ge, -2);
  auto rf = simplex_solve(fr);
  REQUIRE(rf.status == LpStatus::Optimal);
  CHECK(rf.value == make_rat(-9, 2));
  CHECK(rf.point == RatVec{-2, make_rat(-5, 2)});
}

namespace {

// Best objective over all vertices of a bounded LP: each vertex is the
// unique solution of n tight constraints (rows or bounds).
std::optional<Rat> brute_force_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  std::vector<std::pair<RatVec, Rat>> planes;
  for (const auto& c : lp.constraints) planes.emplace_back(c.coeffs, c.rhs);
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j]) planes.emplace_back(unit_rat_vec(n, j), *lp.lower[j]);
    if (lp.upper[j]) planes.emplace_back(unit_rat_vec(n, j), *lp.upper[j]);
  }
  std::optional<Rat> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t from) {
    if (at == n) {
      Mat a(n, n);
      RatVec b(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = planes[pick[i]].first[j];
        b[i] = planes[pick[i]].second;
      }
      auto inv = inverse(a);
      if (!inv) return;
      RatVec x = *inv * b;
      if (!is_feasible(lp, x)) return;
      Rat v = objective_value(lp, x);
      if (!best || (lp.sense == Sense::Maximize ? v > *best : v < *best)) best = v;
      return;
    }
    for (std::size_t p = from; p < planes.size(); ++p) {
      pick[at] = p;
      rec(at + 1, p + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace

TEST_CASE("simplex agrees with vertex enumeration") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-5, 5);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + trial % 2;
    LinearProgram lp(n);
    lp.sense = trial % 3 == 0 ? Sense::Minimize : Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
      lp.objective[j] = d(rng);
      lp.lower[j] = Rat(-4 + trial % 3);
      lp.upper[j] = Rat(4);
    }
    for (int c = 0; c < 3; ++c) {
      RatVec row(n);
      for (auto& x : row) x = d(rng);
      auto rel = static_cast<Relation>((trial + c) % 3);
      lp.add(row, rel == Relation::Eq && c > 0 ? Relation::Le : rel, make_rat(d(rng), 1 + c));
    }
    auto r = simplex_solve(lp);
    auto oracle = brute_force_lp(lp);
    if (!oracle) {
      CHECK(r.status == LpStatus::Infeasible);
      ++infeasible;
      continue;
    }
    REQUIRE(r.status == LpStatus::Optimal);
    ++optimal;
    CHECK(is_feasible(lp, r.point));
    CHECK(r.certificate_ok());
    CHECK(r.value == *oracle);
  }
  CHECK(optimal > 30);
  CHECK(infeasible > 5);
}

TEST_CASE("branch and bound small programs") {
  // minimize z s.t. z >= w >= 1
  IntegerProgram ip{LinearProgram(2), {}, {}};
  ip.lp.sense = Sense::Minimize;
  ip.lp.objective = {1, 0};
  ip.lp.upper = {Rat(100), Rat(100)};
  ip.lp.add({1, -1}, Relation::Ge, 0);
  ip.lp.add({0, 1}, Relation::Ge, 1);
  auto r = ilp_solve(ip);
  REQUIRE(r.status == IlpStatus::Optimal);
  CHECK(r.value == 1);

  IntegerProgram zero{LinearProgram(2), {}, {}};
  zero.lp.lower = {Rat(-5), Rat(-5)};
  zero.lp.upper = {Rat(5), Rat(5)};
  zero.lp.add({0, 0}, Relation::Ge, 1);
  CHECK(ilp_solve(zero).status == IlpStatus::Infeasible);

  IntegerProgram unbounded{LinearProgram(1), {}, {}};
  CHECK_THROWS(ilp_solve(unbounded));
}

TEST_CASE("branch and bound agrees with exhaustive search") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + trial % 3;
    int box = n == 4 ? 4 : 6;
    IntegerProgram ip{LinearProgram(n), {}, {}};
    ip.lp.sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
      ip.lp.objective[j] = make_rat(d(rng), 1 + trial % 2);
      ip.lp.lower[j] = Rat(-box);
      ip.lp.upper[j] = Rat(box);
    }
    for (int c = 0; c < 3; ++c) {
      RatVec row(n);
      for (auto& x : row) x = d(rng);
      ip.lp.add(row, c == 2 ? Relation::Ge : Relation::Le, make_rat(d(rng) * 2 + 1, 2));
    }
    std::optional<Rat> best = oracle::exhaustive_ilp(ip.lp, box);
    auto r = ilp_solve(ip);
    if (!best) {
      CHECK(r.status == IlpStatus::Infeasible);
      continue;
    }
    REQUIRE(r.status == IlpStatus::Optimal);
    CHECK(r.value == *best);
    CHECK(is_feasible(ip.lp, to_rat(r.point)));
  }
}
