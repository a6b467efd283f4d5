#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "liegrad/corpus.hpp"
#include "liegrad/enumerate.hpp"
#include "liegrad/errors.hpp"
#include "oracles.hpp"

using namespace liegrad;

namespace {

AlgebraPtr corpus_ptr(const std::string& name) { return std::make_shared<const LieAlgebra>(corpus_algebra(name)); }

std::vector<IntVec> subgroup_rows(const Subgroup& s) {
  std::vector<IntVec> rows;
  for (std::size_t r = 0; r < s.hnf.rows(); ++r) rows.push_back(s.hnf.row(r));
  return rows;
}

bool in_matrix_span(const std::vector<LinMap>& basis, const LinMap& m) {
  const std::size_t n = m.rows();
  auto flat = [n](const LinMap& a) {
    RatVec v;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v.push_back(a(r, c));
    return v;
  };
  std::vector<RatVec> rows;
  for (const auto& b : basis) rows.push_back(flat(b));
  return in_span(rows, flat(m), n * n);
}

}  // namespace

TEST_CASE("maximal torus certificate") {
  for (std::string name : {"L_3_2", "L_4_2", "L_5_5", "L_6_10", "L_6_22(1)", "L_6_24(1)"}) {
    CAPTURE(name);
    LieAlgebra g = corpus_algebra(name);
    MaximalTorus t = maximal_torus(g);
    CHECK(t.basis.size() == t.grading.rank());
    for (const auto& a : t.basis) {
      CHECK(is_derivation(g, a));
      CHECK(is_semisimple(a));
      for (const auto& b : t.basis) CHECK(commutator(a, b).is_zero());
    }
    // no semisimple part of a centralizer element lies outside the torus
    for (const auto& c : centralizer(derivation_algebra(g), t.basis)) {
      CHECK(in_matrix_span(t.basis, jordan_decompose(c).semisimple));
    }
  }
}

TEST_CASE("quotient enumeration examples") {
  SUBCASE("L_4_2 has 15 torsion-free quotients") {
    Grading m = maximal_grading(corpus_ptr("L_4_2"));
    auto qs = torsionfree_quotients(m, Exec::Serial);
    CHECK(qs.size() == 15);
    CHECK(qs.front().subgroup.rank() == 0);
    CHECK(qs.front().grading == m);
    CHECK(qs.back().grading.rank() == 0);
  }
  SUBCASE("trivial grading") {
    auto g = corpus_ptr("L_3_2");
    Grading t(g, 0, {{IntVec{}, {unit_rat_vec(3, 0), unit_rat_vec(3, 1), unit_rat_vec(3, 2)}}});
    auto qs = torsionfree_quotients(t, Exec::Serial);
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].grading == t);
  }
  SUBCASE("quotient map rejects torsion") {
    IntMat h(1, 2);
    h(0, 0) = 2;
    CHECK_THROWS_AS(quotient_map(Subgroup{2, h}), TorsionInQuotient);
  }
}

TEST_CASE("enumeration equals brute-force subset closure on rank <= 3 corpus gradings") {
  std::size_t checked = 0;
  for (const auto& entry : corpus_entries()) {
    if (entry.reference.maximal_rank > 3) continue;
    CAPTURE(entry.name);
    Grading m = maximal_grading(corpus_ptr(entry.name));
    std::set<std::vector<IntVec>> expect = oracle::saturated_difference_lattices(m);
    std::set<std::vector<IntVec>> got;
    for (const auto& s : difference_subgroups(m)) got.insert(subgroup_rows(s));
    CHECK(got == expect);
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("quotient gradings are distinct saturated universal realizations") {
  for (const auto& entry : corpus_entries()) {
    if (entry.dim > 5) continue;
    CAPTURE(entry.name);
    Grading m = maximal_grading(corpus_ptr(entry.name));
    auto qs = torsionfree_quotients(m, Exec::Serial);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const auto& q = qs[i];
      CHECK(q.subgroup.saturated());
      CHECK(oracle::maximal_minor_gcd(subgroup_rows(q.subgroup), m.rank()) == 1);
      if (i > 0) CHECK(qs[i - 1].subgroup < q.subgroup);
      CHECK(q.grading.rank() == m.rank() - q.subgroup.rank());
      CHECK(universal_realization(q.grading) == q.grading);
      std::vector<Layer> layers(q.grading.layers().begin(), q.grading.layers().end());
      CHECK(is_grading(q.grading.algebra(), layers).ok);
      // the projection kills exactly the subgroup
      for (std::size_t r = 0; r < q.subgroup.rank(); ++r) CHECK(is_zero(q.projection.apply(q.subgroup.hnf.row(r))));
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (std::string name : {"L_5_2", "L_6_8", "L_6_22(1)"}) {
    CAPTURE(name);
    Grading m = maximal_grading(corpus_ptr(name));
    auto a = torsionfree_quotients(m, Exec::Serial);
    auto b = torsionfree_quotients(m, Exec::Parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].subgroup == b[i].subgroup);
      CHECK(a[i].grading == b[i].grading);
    }
  }
}
