#include "liegrad/grading.hpp"

#include <algorithm>
#include <numeric>

#include "liegrad/errors.hpp"

namespace liegrad {

namespace {

// Coordinates of vectors with respect to the concatenated layer bases.
class LayerCoordinates {
 public:
  LayerCoordinates(std::size_t n, const std::vector<std::vector<RatVec>>& bases) {
    std::vector<RatVec> cols;
    for (std::size_t l = 0; l < bases.size(); ++l)
      for (const auto& v : bases[l]) {
        if (v.size() != n) throw DimensionMismatch("layer vector length differs from algebra dimension");
        cols.push_back(v);
        owner_.push_back(l);
      }
    if (cols.size() != n) throw NotDirectSum("layer dimensions sum to " + std::to_string(cols.size()) + ", algebra has dimension " + std::to_string(n));
    auto inv = inverse(Mat::from_columns(cols, n));
    if (!inv) throw NotDirectSum("layers are linearly dependent");
    inv_ = std::move(*inv);
  }

  // Layers in which v has a nonzero component, ascending.
  std::vector<std::size_t> support(const RatVec& v) const {
    RatVec c = inv_ * v;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0 && (out.empty() || out.back() != owner_[i])) out.push_back(owner_[i]);
    return out;
  }

 private:
  std::vector<std::size_t> owner_;
  Mat inv_;
};

std::vector<std::vector<RatVec>> canonical_bases(const std::vector<std::vector<RatVec>>& layers, std::size_t n) {
  std::vector<std::vector<RatVec>> out;
  for (const auto& l : layers) {
    auto b = span_basis(l, n);
    if (b.size() != l.size()) throw NotDirectSum("layer spanning set is linearly dependent");
    if (b.empty()) throw InvalidGrading("empty layer");
    out.push_back(std::move(b));
  }
  return out;
}

// Layer containing all brackets [V_a, V_b]; nullopt when they all vanish.
// Throws InvalidGrading when the brackets are spread over several layers.
std::optional<std::size_t> bracket_target(const LieAlgebra& g, const LayerCoordinates& coords,
                                          const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
  std::optional<std::size_t> target;
  for (const auto& x : a)
    for (const auto& y : b) {
      RatVec z = g.bracket(x, y);
      if (is_zero(z)) continue;
      auto s = coords.support(z);
      if (s.size() != 1 || (target && *target != s[0]))
        throw InvalidGrading("bracket of two layers is not contained in a single layer");
      target = s[0];
    }
  return target;
}

std::size_t first_pivot(const std::vector<RatVec>& basis) {
  const RatVec& v = basis.front();
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  return p;
}

}  // namespace

Grading::Grading(AlgebraPtr algebra, std::size_t rank, std::vector<Layer> layers)
    : algebra_(std::move(algebra)), rank_(rank) {
  const std::size_t n = algebra_->dim();
  for (auto& l : layers) {
    if (l.weight.size() != rank) throw InvalidGrading("weight length differs from grading rank");
    auto b = span_basis(l.basis, n);
    if (b.size() != l.basis.size()) throw NotDirectSum("layer spanning set is linearly dependent");
    if (b.empty()) throw InvalidGrading("empty layer");
    l.basis = std::move(b);
  }
  std::sort(layers.begin(), layers.end(), [](const Layer& a, const Layer& b) { return a.weight < b.weight; });
  for (std::size_t i = 1; i < layers.size(); ++i)
    if (layers[i].weight == layers[i - 1].weight) throw InvalidGrading("repeated weight " + to_string(layers[i].weight));
  auto check = is_grading(*algebra_, layers);
  if (!check.ok)
    throw InvalidGrading("bracket of layers " + to_string(layers[check.violation->first].weight) + " and " +
                         to_string(layers[check.violation->second].weight) + " leaves the sum layer");
  layers_ = std::move(layers);
}

std::optional<std::size_t> Grading::find(const IntVec& weight) const {
  auto it = std::lower_bound(layers_.begin(), layers_.end(), weight,
                             [](const Layer& l, const IntVec& w) { return l.weight < w; });
  if (it == layers_.end() || it->weight != weight) return std::nullopt;
  return static_cast<std::size_t>(it - layers_.begin());
}

std::optional<std::size_t> Grading::layer_of_basis_vector(std::size_t i) const {
  RatVec e = unit_rat_vec(algebra_->dim(), i);
  for (std::size_t l = 0; l < layers_.size(); ++l)
    if (in_span(layers_[l].basis, e, algebra_->dim())) return l;
  return std::nullopt;
}

std::vector<IntVec> Grading::weights() const {
  std::vector<IntVec> out;
  for (const auto& l : layers_) out.push_back(l.weight);
  return out;
}

bool operator==(const Grading& a, const Grading& b) {
  if (a.rank_ != b.rank_ || a.layers_.size() != b.layers_.size()) return false;
  if (a.algebra_ != b.algebra_ && !(*a.algebra_ == *b.algebra_)) return false;
  for (std::size_t i = 0; i < a.layers_.size(); ++i)
    if (a.layers_[i].weight != b.layers_[i].weight || a.layers_[i].basis != b.layers_[i].basis) return false;
  return true;
}

bool same_layers(const Grading& a, const Grading& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<RatVec>> x, y;
  for (const auto& l : a.layers()) x.push_back(l.basis);
  for (const auto& l : b.layers()) y.push_back(l.basis);
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

GradingCheck is_grading(const LieAlgebra& g, const std::vector<Layer>& layers) {
  const std::size_t n = g.dim();
  std::vector<std::vector<RatVec>> bases;
  for (const auto& l : layers) bases.push_back(l.basis);
  LayerCoordinates coords(n, bases);
  for (std::size_t a = 0; a < layers.size(); ++a)
    for (std::size_t b = a; b < layers.size(); ++b) {
      IntVec sum = layers[a].weight + layers[b].weight;
      std::optional<std::size_t> target;
      for (std::size_t t = 0; t < layers.size(); ++t)
        if (layers[t].weight == sum) target = t;
      for (const auto& x : layers[a].basis)
        for (const auto& y : layers[b].basis) {
          RatVec z = g.bracket(x, y);
          if (is_zero(z)) continue;
          auto s = coords.support(z);
          if (!target || s.size() != 1 || s[0] != *target) return {false, std::make_pair(a, b)};
        }
    }
  return {};
}

EigenGrading induced_grading(AlgebraPtr g, const std::vector<LinMap>& torus) {
  const std::size_t n = g->dim();
  for (const auto& t : torus)
    if (t.rows() != n || t.cols() != n) throw DimensionMismatch("torus element size differs from algebra dimension");
  for (std::size_t i = 0; i < torus.size(); ++i)
    for (std::size_t j = i + 1; j < torus.size(); ++j)
      if (!commutator(torus[i], torus[j]).is_zero())
        throw NotCommuting("torus elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");

  std::vector<EigenLayer> spaces;
  {
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_rat_vec(n, i));
    spaces.push_back({RatVec{}, all});
  }
  for (std::size_t ti = 0; ti < torus.size(); ++ti) {
    const LinMap& t = torus[ti];
    Poly mp = minimal_polynomial(t);
    if (poly_gcd(mp, derivative(mp)).degree() > 0)
      throw NotSemisimple("torus element " + std::to_string(ti + 1) + " has minimal polynomial " + mp.to_string());
    auto roots = rational_roots(mp);
    if (roots.residual.degree() > 0) throw FieldExtensionRequired(mp.to_string());
    std::vector<EigenLayer> refined;
    for (const auto& s : spaces)
      for (const auto& [lambda, mult] : roots.roots) {
        auto eig = nullspace(t - lambda * Mat::identity(n));
        auto part = intersect_spans(s.basis, eig, n);
        if (part.empty()) continue;
        RatVec ev = s.eigenvalues;
        ev.push_back(lambda);
        refined.push_back({std::move(ev), std::move(part)});
      }
    spaces = std::move(refined);
  }
  std::sort(spaces.begin(), spaces.end(), [](const EigenLayer& a, const EigenLayer& b) { return a.eigenvalues < b.eigenvalues; });
  return {std::move(g), torus, std::move(spaces)};
}

Grading universal_realization(AlgebraPtr g, const std::vector<std::vector<RatVec>>& layers_in) {
  const std::size_t n = g->dim();
  auto layers = canonical_bases(layers_in, n);
  const std::size_t N = layers.size();
  LayerCoordinates coords(n, layers);

  std::vector<IntVec> relations;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      auto k = bracket_target(*g, coords, layers[i], layers[j]);
      if (!k) continue;
      IntVec r = zero_int_vec(N);
      r[i] += 1;
      r[j] += 1;
      r[*k] -= 1;
      relations.push_back(std::move(r));
    }
  SmithForm snf = smith_normal_form(IntMat::from_rows(relations, N));
  auto factors = snf.invariant_factors();
  for (const auto& d : factors)
    if (d != 1) throw TorsionInQuotient("grading relations have invariant factor " + d.get_str());
  const std::size_t r = factors.size();
  const std::size_t k = N - r;

  // layers in pivot order; column c of the weight matrix is layer order[c]
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t pa = first_pivot(layers[a]), pb = first_pivot(layers[b]);
    if (pa != pb) return pa < pb;
    return layers[a] < layers[b];
  });
  IntMat m(k, N);
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t q = 0; q < k; ++q) m(q, c) = snf.V(order[c], r + q);
  IntMat h = hermite_normal_form(m).H;

  std::vector<Layer> out(N);
  for (std::size_t c = 0; c < N; ++c) out[order[c]] = {h.col(c), layers[order[c]]};
  return Grading(std::move(g), k, std::move(out));
}

Grading universal_realization(const Grading& v) {
  std::vector<std::vector<RatVec>> layers;
  for (const auto& l : v.layers()) layers.push_back(l.basis);
  return universal_realization(v.algebra_ptr(), layers);
}

Grading universal_realization(const EigenGrading& v) {
  std::vector<std::vector<RatVec>> layers;
  for (const auto& l : v.layers) layers.push_back(l.basis);
  return universal_realization(v.algebra, layers);
}

Grading push_forward(const Grading& v, const GroupHom& f) {
  if (f.matrix.cols() != v.rank()) throw DimensionMismatch("homomorphism domain rank differs from grading rank");
  std::vector<Layer> merged;
  for (const auto& l : v.layers()) {
    IntVec w = f.apply(l.weight);
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Layer& m) { return m.weight == w; });
    if (it == merged.end()) {
      merged.push_back({std::move(w), l.basis});
    } else {
      it->basis.insert(it->basis.end(), l.basis.begin(), l.basis.end());
    }
  }
  return Grading(v.algebra_ptr(), f.matrix.rows(), std::move(merged));
}

RankType rank_and_type(const Grading& v) {
  RankType rt{universal_realization(v).rank(), {}};
  std::size_t maxdim = 0;
  for (const auto& l : v.layers()) maxdim = std::max(maxdim, l.basis.size());
  rt.type.assign(maxdim, 0);
  for (const auto& l : v.layers()) ++rt.type[l.basis.size() - 1];
  return rt;
}

ProductSplit detect_product(const Grading& v) {
  const std::size_t N = v.size();
  const LieAlgebra& g = v.algebra();
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      bool nonzero = false;
      for (const auto& x : v.layers()[a].basis) {
        for (const auto& y : v.layers()[b].basis)
          if (!is_zero(g.bracket(x, y))) {
            nonzero = true;
            break;
          }
        if (nonzero) break;
      }
      if (!nonzero) continue;
      unite(a, b);
      if (auto t = v.find(v.layers()[a].weight + v.layers()[b].weight)) unite(a, *t);
    }
  ProductSplit s;
  std::vector<std::size_t> part_of(N, N);
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t r = root(i);
    if (part_of[r] == N) {
      part_of[r] = s.parts.size();
      s.parts.emplace_back();
      s.ideals.emplace_back();
    }
    s.parts[part_of[r]].push_back(i);
    const auto& b = v.layers()[i].basis;
    s.ideals[part_of[r]].insert(s.ideals[part_of[r]].end(), b.begin(), b.end());
  }
  for (auto& ideal : s.ideals) ideal = span_basis(ideal, g.dim());
  return s;
}

}  // namespace liegrad
