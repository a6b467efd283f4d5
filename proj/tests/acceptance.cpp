// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "liegrad/classify.hpp"
#include "liegrad/corpus.hpp"
#include "liegrad/errors.hpp"
#include "liegrad/io.hpp"
#include "liegrad/lqp.hpp"
#include "oracles.hpp"

using namespace liegrad;

namespace {

const std::string kData = LIEGRAD_DATA_DIR;

// Time limits in seconds.
constexpr double kSweepLimit = 600.0;
constexpr double kL42Limit = 10.0;
constexpr double kBoundLimit = 1.0;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

struct Shared {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, Grading> maximal;
  std::map<std::string, Classification> classes;
};

Outcome maximal_ranks(Shared& s) {
  auto t0 = Clock::now();
  std::size_t ok = 0;
  std::string bad;
  for (const auto& e : corpus_entries()) {
    auto g = std::make_shared<const LieAlgebra>(corpus_algebra(e.name));
    s.algebras.emplace(e.name, g);
    Grading m = maximal_grading(g);
    if (m.rank() == e.reference.maximal_rank) ++ok;
    else bad += " " + e.name + "(" + std::to_string(m.rank()) + ")";
    s.maximal.emplace(e.name, std::move(m));
  }
  double t = seconds_since(t0);
  const std::size_t n = corpus_entries().size();
  std::ostringstream d;
  d << ok << "/" << n << " rows match k in " << t << " s (limit " << kSweepLimit << " s)" << bad;
  return {ok == n && t < kSweepLimit, d.str()};
}

Outcome stratifiability(Shared& s) {
  std::size_t ok = 0, verified = 0, returned = 0;
  for (const auto& e : corpus_entries()) {
    const auto& g = s.algebras.at(e.name);
    StratificationResult r = stratification(g);
    if (r.stratifiable == e.reference.stratifiable) ++ok;
    if (!r.stratifiable) continue;
    ++returned;
    bool good = is_derivation(*g, *r.derivation) && oracle::generates(*g, r.grading->layers().front().basis);
    for (std::size_t i = 0; i < r.grading->size() && good; ++i) {
      Mat shifted = *r.derivation - Rat(static_cast<long>(i + 1)) * Mat::identity(g->dim());
      good = span_basis(nullspace(shifted), g->dim()) == r.grading->layers()[i].basis;
    }
    if (good) ++verified;
  }
  const std::size_t n = corpus_entries().size();
  std::ostringstream d;
  d << ok << "/" << n << " s? entries match; " << verified << "/" << returned << " stratifications verified";
  return {ok == n && verified == returned, d.str()};
}

Outcome l42_end_to_end(Shared& s) {
  auto t0 = Clock::now();
  const auto& g = s.algebras.at("L_4_2");
  Classification c = classify_gradings(maximal_grading(g));
  // every published class is equivalent to exactly one computed class
  const auto cls = c.classes();
  std::vector<int> hits(cls.size(), 0);
  bool one_to_one = true;
  for (const auto& sets : oracle::l42_class_table()) {
    Grading t = oracle::grading_from_index_sets(g, sets);
    int matches = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto r = find_equivalence(c.gradings[cls[i]].grading, t);
      if (r.kind == EquivalenceResult::Kind::Equivalent && oracle::witness_holds(c.gradings[cls[i]].grading, t, *r.f, *r.phi)) {
        ++matches;
        ++hits[i];
      }
    }
    one_to_one = one_to_one && matches == 1;
  }
  for (int h : hits) one_to_one = one_to_one && h == 1;
  double t = seconds_since(t0);
  std::ostringstream d;
  d << c.counts.quotients << " quotients, " << c.counts.classes << " classes, " << c.counts.undecided
    << " undecided, " << c.counts.positive << " positive; table match " << (one_to_one ? "1:1" : "broken") << "; "
    << t << " s (limit " << kL42Limit << " s)";
  bool pass = c.counts.quotients == 15 && c.counts.classes == 11 && c.counts.undecided == 0 &&
              c.counts.positive == 6 && one_to_one && t < kL42Limit;
  s.classes.emplace("L_4_2", std::move(c));
  return {pass, d.str()};
}

Outcome classification_counts(Shared& s) {
  std::size_t exact = 0, exact_total = 0, bracketed = 0, bracket_total = 0, undecided_rows = 0;
  std::string bad;
  for (const auto& e : corpus_entries()) {
    auto it = s.classes.find(e.name);
    if (it == s.classes.end()) it = s.classes.emplace(e.name, classify_gradings(s.maximal.at(e.name))).first;
    const auto& c = it->second.counts;
    if (c.undecided > 0) ++undecided_rows;
    if (e.dim <= 4) {
      ++exact_total;
      if (c.classes == e.reference.classes && c.undecided == 0) ++exact;
      else bad += " " + e.name;
    } else {
      ++bracket_total;
      if (c.families <= e.reference.classes && e.reference.classes <= c.classes) ++bracketed;
      else bad += " " + e.name;
    }
  }
  std::ostringstream d;
  d << "dim<=4 exact " << exact << "/" << exact_total << "; dim 5-6 families<=#<=classes " << bracketed << "/"
    << bracket_total << " (" << undecided_rows << " rows with undecided pairs)" << bad;
  return {exact == exact_total && bracketed == bracket_total, d.str()};
}

Outcome product_detection(Shared& s) {
  const auto& g = s.algebras.at("L_6_22(1)");
  ProductSplit p = detect_product(s.maximal.at("L_6_22(1)"));
  const LieAlgebra h3 = corpus_algebra("L_3_2");
  std::size_t iso = 0;
  for (const auto& ideal : p.ideals) {
    if (ideal.size() != 3) continue;
    LieAlgebra sub = restrict_to_subalgebra(*g, ideal);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        RatVec z = sub.bracket_basis(a, b);
        if (is_zero(z)) continue;
        Mat basis = Mat::from_columns({unit_rat_vec(3, a), unit_rat_vec(3, b), z}, 3);
        if (determinant(basis) != 0 && change_basis(sub, basis) == h3) {
          ++iso;
          a = b = 3;
        }
      }
  }
  std::ostringstream d;
  d << p.parts.size() << " ideals, " << iso << " isomorphic to L_3_2";
  return {p.parts.size() == 2 && iso == 2, d.str()};
}

Outcome positive_realizations(Shared& s) {
  const Grading& m = s.maximal.at("L_4_2");
  PositiveRealization opt = positive_realization(m, RealizationMode::Optimal);
  auto brute = oracle::best_positive_projection(m, 6);
  std::size_t ok = 0, total = 0;
  for (const auto& e : corpus_entries()) {
    const Classification& c = s.classes.at(e.name);
    for (std::size_t i : c.classes()) {
      if (!c.gradings[i].positive) continue;
      ++total;
      const Grading& v = c.gradings[i].grading;
      PositiveRealization r = positive_realization(v, RealizationMode::Fast);
      std::set<Int> seen;
      bool good = r.grading.size() == v.size();
      for (const auto& l : v.layers()) {
        Int x = dot(r.w, l.weight);
        good = good && x >= 1;
        seen.insert(x);
      }
      if (good && seen.size() == v.size()) ++ok;
    }
  }
  std::ostringstream d;
  d << "optimal max weight " << opt.max_weight << ", exhaustive |w|<=6 gives "
    << (brute ? brute->get_str() : std::string("none")) << "; fast verified on " << ok << "/" << total
    << " positive classes";
  return {opt.max_weight == 4 && brute && *brute == 4 && ok == total, d.str()};
}

Outcome lqp_bounds(Shared&) {
  auto g = std::make_shared<const LieAlgebra>(load_algebra(kData + "/L_6_10_degraaf.json"));
  Grading w = grading_from_json(json::parse(read_file(kData + "/L_6_10_degraaf_grading.json")), g);
  std::optional<FormBasis> prev;
  std::ostringstream d;
  bool pass = true;
  double slowest = 0;
  for (int h = 1; h <= 3; ++h) {
    FormBasis cur = form_basis_from_json(json::parse(read_file(kData + "/L_6_10_E0_" + std::to_string(h) + ".json")), 6);
    auto t0 = Clock::now();
    BoundResult r = optimize_bound(w, prev, cur);
    slowest = std::max(slowest, seconds_since(t0));
    d << "h=" << h << ":" << to_string(r.value) << " ";
    pass = pass && r.value == make_rat(1, 10);
    prev = cur;
  }
  Rat q = homogeneous_dimension(w, {1, 1, 1});
  d << "Q(1,1,1)=" << to_string(q) << "; slowest " << slowest << " s (limit " << kBoundLimit << " s)";
  return {pass && q == 10 && slowest < kBoundLimit, d.str()};
}

Outcome property_suites(Shared& s) {
  std::size_t gradings = 0, bad_grading = 0, idem_fail = 0, witnesses = 0, bad_witness = 0, enum_checked = 0,
              enum_fail = 0, snf_fail = 0, ilp_fail = 0;
  for (const auto& e : corpus_entries()) {
    const Grading& m = s.maximal.at(e.name);
    const Classification& c = s.classes.at(e.name);
    for (const auto& cg : c.gradings) {
      ++gradings;
      std::vector<Layer> layers(cg.grading.layers().begin(), cg.grading.layers().end());
      if (!is_grading(m.algebra(), layers).ok) ++bad_grading;
      if (!(universal_realization(cg.grading) == cg.grading)) ++idem_fail;
      if (cg.status == ClassStatus::EquivalentTo) {
        ++witnesses;
        if (!oracle::witness_holds(c.gradings[cg.representative].grading, cg.grading, *cg.f, *cg.phi)) ++bad_witness;
      }
    }
    if (m.rank() <= 3) {
      ++enum_checked;
      std::set<std::vector<IntVec>> got;
      for (const auto& sub : difference_subgroups(m)) {
        std::vector<IntVec> rows;
        for (std::size_t r = 0; r < sub.hnf.rows(); ++r) rows.push_back(sub.hnf.row(r));
        got.insert(rows);
      }
      if (got != oracle::saturated_difference_lattices(m)) ++enum_fail;
    }
  }

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    SmithForm sf = smith_normal_form(m);
    bool ok = sf.U * m * sf.V == sf.S && abs(determinant(sf.U)) == 1 && abs(determinant(sf.V)) == 1;
    auto f = sf.invariant_factors();
    Int prod = 1;
    for (std::size_t k = 0; k < f.size() && ok; ++k) {
      prod *= f[k];
      ok = oracle::determinantal_divisor(m, k + 1) == prod && (k == 0 || f[k] % f[k - 1] == 0);
    }
    HermiteForm hf = hermite_normal_form(m);
    IntMat mixed = oracle::random_unimodular(rng, r) * m;
    ok = ok && hf.U * m == hf.H && abs(determinant(hf.U)) == 1 && hermite_normal_form(mixed).H == hf.H;
    if (!ok) ++snf_fail;
  }

  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const int box = 4;
    IntegerProgram ip{LinearProgram(n), {}, {}};
    ip.lp.sense = trial % 2 ? Sense::Minimize : Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
      ip.lp.objective[j] = coeff(rng);
      ip.lp.lower[j] = Rat(-box);
      ip.lp.upper[j] = Rat(box);
    }
    for (int k = 0; k < 3; ++k) {
      RatVec row(n);
      for (auto& x : row) x = coeff(rng);
      ip.lp.add(row, k == 2 ? Relation::Ge : Relation::Le, make_rat(coeff(rng) * 2 + 1, 2));
    }
    auto best = oracle::exhaustive_ilp(ip.lp, box);
    auto res = ilp_solve(ip);
    bool ok = best ? res.status == IlpStatus::Optimal && res.value == *best : res.status == IlpStatus::Infeasible;
    if (!ok) ++ilp_fail;
  }

  std::ostringstream d;
  d << "gradings " << gradings - bad_grading << "/" << gradings << " valid, idempotence failures " << idem_fail
    << "; SNF/HNF failures " << snf_fail << "/60; ILP mismatches " << ilp_fail << "/60; witnesses "
    << witnesses - bad_witness << "/" << witnesses << "; enumeration oracle " << enum_checked - enum_fail << "/"
    << enum_checked;
  bool pass = bad_grading == 0 && idem_fail == 0 && snf_fail == 0 && ilp_fail == 0 && bad_witness == 0 &&
              enum_fail == 0 && witnesses > 0 && enum_checked > 0;
  return {pass, d.str()};
}

}  // namespace

int main() {
  Shared shared;
  struct Criterion {
    const char* name;
    Outcome (*run)(Shared&);
  };
  const Criterion criteria[] = {
      {"maximal ranks", maximal_ranks},
      {"stratifiability", stratifiability},
      {"L_4_2 end to end", l42_end_to_end},
      {"classification counts", classification_counts},
      {"product detection", product_detection},
      {"positive realizations", positive_realizations},
      {"lqp bounds", lqp_bounds},
      {"property suites", property_suites},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run(shared);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
