#include "liegrad/classify.hpp"

#include <map>
#include <numeric>

#include "liegrad/positive.hpp"

namespace liegrad {

std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Representative: return "representative";
    case ClassStatus::EquivalentTo: return "equivalent";
    case ClassStatus::Undecided: return "undecided";
  }
  return "";
}

std::vector<std::size_t> Classification::classes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gradings.size(); ++i)
    if (gradings[i].status != ClassStatus::EquivalentTo) out.push_back(i);
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

struct FamilyOutcome {
  struct Entry {
    std::size_t index;
    ClassStatus status;
    std::size_t representative;
    std::optional<GroupHom> f;
    std::optional<LinMap> phi;
  };
  std::vector<Entry> entries;
  std::vector<UndecidedPair> undecided;
};

FamilyOutcome classify_family(const std::vector<Quotient>& qs, const std::vector<std::size_t>& members,
                              const Grading& maximal) {
  FamilyOutcome out;
  std::vector<std::size_t> classes;
  for (std::size_t m : members) {
    FamilyOutcome::Entry e{m, ClassStatus::Representative, m, std::nullopt, std::nullopt};
    std::vector<UndecidedPair> open;
    for (std::size_t c : classes) {
      auto r = find_equivalence(qs[c].grading, qs[m].grading, maximal);
      if (r.kind == EquivalenceResult::Kind::Equivalent) {
        e.status = ClassStatus::EquivalentTo;
        e.representative = c;
        e.f = std::move(r.f);
        e.phi = std::move(r.phi);
        break;
      }
      if (r.kind == EquivalenceResult::Kind::Undecided) open.push_back({c, m, r.candidates.size()});
    }
    if (e.status != ClassStatus::EquivalentTo) {
      if (!open.empty()) e.status = ClassStatus::Undecided;
      out.undecided.insert(out.undecided.end(), open.begin(), open.end());
      classes.push_back(m);
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Classification classify_gradings(const Grading& maximal, Exec exec) {
  std::vector<Quotient> qs = torsionfree_quotients(maximal, exec);
  const std::size_t n = qs.size();

  // families: same rank and type, joined by layer-matching isomorphisms
  std::map<RankType, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[rank_and_type(qs[i].grading)].push_back(i);
  std::vector<std::vector<std::size_t>> bucket_list;
  for (auto& [key, v] : buckets) bucket_list.push_back(std::move(v));
  auto joined = ordered_map<std::vector<std::pair<std::size_t, std::size_t>>>(
      bucket_list.size(),
      [&](std::size_t b) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        const auto& v = bucket_list[b];
        for (std::size_t x = 0; x < v.size(); ++x)
          for (std::size_t y = x + 1; y < v.size(); ++y)
            if (!matching_isomorphisms(qs[v[x]].grading, qs[v[y]].grading).empty()) edges.emplace_back(v[x], v[y]);
        return edges;
      },
      exec);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& edges : joined)
    for (auto [a, b] : edges) {
      std::size_t ra = find_root(parent, a), rb = find_root(parent, b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  // families numbered by their smallest member
  std::map<std::size_t, std::size_t> family_id;
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> family_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find_root(parent, i);
    auto [it, inserted] = family_id.emplace(r, families.size());
    if (inserted) families.emplace_back();
    families[it->second].push_back(i);
    family_of[i] = it->second;
  }

  auto outcomes = ordered_map<FamilyOutcome>(
      families.size(), [&](std::size_t f) { return classify_family(qs, families[f], maximal); }, exec);

  Classification res{maximal, {}, {}, {}};
  res.gradings.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    res.gradings.push_back({qs[i].grading, qs[i].subgroup, ClassStatus::Representative, i, family_of[i],
                            std::nullopt, std::nullopt, false});
  for (auto& o : outcomes) {
    for (auto& e : o.entries) {
      auto& cg = res.gradings[e.index];
      cg.status = e.status;
      cg.representative = e.representative;
      cg.f = std::move(e.f);
      cg.phi = std::move(e.phi);
    }
    res.undecided.insert(res.undecided.end(), o.undecided.begin(), o.undecided.end());
  }
  std::sort(res.undecided.begin(), res.undecided.end(),
            [](const UndecidedPair& a, const UndecidedPair& b) {
              return std::make_pair(a.first, a.second) < std::make_pair(b.first, b.second);
            });

  const auto cls = res.classes();
  auto positive = ordered_map<char>(
      cls.size(), [&](std::size_t i) { return static_cast<char>(admits_positive_realization(res.gradings[cls[i]].grading)); },
      exec);
  for (std::size_t i = 0; i < cls.size(); ++i) res.gradings[cls[i]].positive = positive[i];
  for (auto& cg : res.gradings)
    if (cg.status == ClassStatus::EquivalentTo) cg.positive = res.gradings[cg.representative].positive;

  res.counts.quotients = n;
  res.counts.families = families.size();
  res.counts.classes = cls.size();
  res.counts.undecided = res.undecided.size();
  for (std::size_t c : cls) res.counts.positive += res.gradings[c].positive ? 1 : 0;
  return res;
}

Classification classify_gradings(const LieAlgebra& g, Exec exec) {
  return classify_gradings(maximal_grading(std::make_shared<const LieAlgebra>(g)), exec);
}

}  // namespace liegrad
