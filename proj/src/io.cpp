#include "liegrad/io.hpp"

#include <fstream>
#include <sstream>

#include "liegrad/corpus.hpp"
#include "liegrad/errors.hpp"

namespace liegrad {

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("expected a rational, got " + j.dump());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (is_integer(r)) return r.get_num();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json int_vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

json rat_vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::size_t index_from_json(const json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  long i = j.get<long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    throw ParseError(std::string(what) + " " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

LieAlgebra algebra_from_json(const json& j) {
  const json& dj = field(j, "dim");
  if (!dj.is_number_integer() || dj.get<long>() < 0) throw ParseError("dim must be a nonnegative integer");
  const auto dim = static_cast<std::size_t>(dj.get<long>());
  LieAlgebra g(dim);
  if (j.contains("name")) g.name = j.at("name").get<std::string>();
  if (j.contains("labels")) {
    const json& lj = j.at("labels");
    if (!lj.is_array() || lj.size() != dim) throw ParseError("labels must list one name per basis vector");
    for (const auto& l : lj) g.labels.push_back(l.get<std::string>());
  }
  const json& bj = field(j, "brackets");
  if (!bj.is_array()) throw ParseError("brackets must be an array");
  std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
  for (const auto& b : bj) {
    std::size_t i = index_from_json(field(b, "i"), dim, "bracket index i");
    std::size_t jj = index_from_json(field(b, "j"), dim, "bracket index j");
    if (i >= jj) throw ParseError("bracket entries need i < j, got (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ")");
    if (seen[i][jj]) throw ParseError("duplicate bracket (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ")");
    seen[i][jj] = true;
    RatVec value = zero_rat_vec(dim);
    const json& terms = field(b, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const auto& t : terms) value[index_from_json(field(t, "k"), dim, "term index k")] += rat_from_json(field(t, "coeff"));
    g.set_bracket(i, jj, value);
  }
  return g;
}

json algebra_to_json(const LieAlgebra& g) {
  json j;
  j["name"] = g.name;
  j["dim"] = g.dim();
  if (!g.labels.empty()) j["labels"] = g.labels;
  json br = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      json terms = json::array();
      for (std::size_t l = 0; l < g.dim(); ++l)
        if (g.c(i, k, l) != 0) terms.push_back({{"k", l + 1}, {"coeff", to_string(g.c(i, k, l))}});
      if (!terms.empty()) br.push_back({{"i", i + 1}, {"j", k + 1}, {"terms", terms}});
    }
  j["brackets"] = br;
  return j;
}

std::string dump_algebra(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LieAlgebra load_algebra(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) return corpus_algebra(arg.substr(7));
  json j;
  try {
    j = json::parse(read_file(arg));
  } catch (const json::exception& e) {
    throw ParseError(arg + ": " + e.what());
  }
  try {
    return algebra_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(arg + ": " + e.what());
  }
}

json grading_to_json(const Grading& v) {
  json layers = json::array();
  for (const auto& l : v.layers()) {
    json basis = json::array();
    for (const auto& b : l.basis) basis.push_back(rat_vec_to_json(b));
    layers.push_back({{"weight", int_vec_to_json(l.weight)}, {"basis", basis}});
  }
  return {{"rank", v.rank()}, {"layers", layers}};
}

Grading grading_from_json(const json& j, AlgebraPtr g) {
  const json& rj = field(j, "rank");
  if (!rj.is_number_integer() || rj.get<long>() < 0) throw ParseError("rank must be a nonnegative integer");
  const auto rank = static_cast<std::size_t>(rj.get<long>());
  std::vector<Layer> layers;
  for (const auto& lj : field(j, "layers")) {
    Layer l;
    for (const auto& x : field(lj, "weight")) l.weight.push_back(int_from_json(x));
    if (l.weight.size() != rank) throw ParseError("layer weight length differs from rank");
    for (const auto& bj : field(lj, "basis")) {
      RatVec b;
      for (const auto& x : bj) b.push_back(rat_from_json(x));
      if (b.size() != g->dim()) throw ParseError("layer basis vector length differs from dim");
      l.basis.push_back(std::move(b));
    }
    layers.push_back(std::move(l));
  }
  return Grading(std::move(g), rank, std::move(layers));
}

FormBasis form_basis_from_json(const json& j, std::size_t dim) {
  FormBasis b;
  const json& dj = field(j, "degree");
  if (!dj.is_number_integer() || dj.get<long>() < 0) throw ParseError("degree must be a nonnegative integer");
  b.degree = static_cast<std::size_t>(dj.get<long>());
  for (const auto& fj : field(j, "forms")) {
    Form f;
    for (const auto& mj : fj) {
      Monomial m;
      for (const auto& x : field(mj, "indices")) m.indices.push_back(index_from_json(x, dim, "form index"));
      m.coeff = mj.contains("coeff") ? rat_from_json(mj.at("coeff")) : Rat(1);
      f.push_back(std::move(m));
    }
    b.forms.push_back(std::move(f));
  }
  check_form_basis(b, dim);
  return b;
}

json form_basis_to_json(const FormBasis& b) {
  json forms = json::array();
  for (const auto& f : b.forms) {
    json fj = json::array();
    for (const auto& m : f) {
      json idx = json::array();
      for (auto i : m.indices) idx.push_back(i + 1);
      fj.push_back({{"indices", idx}, {"coeff", to_string(m.coeff)}});
    }
    forms.push_back(fj);
  }
  return {{"degree", b.degree}, {"forms", forms}};
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rat_vec_to_json(m.row(r)));
  return rows;
}

json classification_to_json(const std::string& name, const Classification& c) {
  json classes = json::array();
  for (std::size_t i : c.classes()) {
    const auto& cg = c.gradings[i];
    json members = json::array();
    for (std::size_t m = 0; m < c.gradings.size(); ++m)
      if (c.gradings[m].representative == i) members.push_back(m);
    classes.push_back({{"index", i},
                       {"status", to_string(cg.status)},
                       {"family", cg.family},
                       {"positive", cg.positive},
                       {"members", members},
                       {"grading", grading_to_json(cg.grading)}});
  }
  json quotients = json::array();
  for (std::size_t i = 0; i < c.gradings.size(); ++i) {
    const auto& cg = c.gradings[i];
    json sub = json::array();
    for (std::size_t r = 0; r < cg.subgroup.hnf.rows(); ++r) {
      IntVec row;
      for (std::size_t s = 0; s < cg.subgroup.hnf.cols(); ++s) row.push_back(cg.subgroup.hnf(r, s));
      sub.push_back(int_vec_to_json(row));
    }
    json q = {{"index", i}, {"subgroup", sub}, {"status", to_string(cg.status)}, {"representative", cg.representative}};
    if (cg.f) {
      json f = json::array();
      for (std::size_t r = 0; r < cg.f->matrix.rows(); ++r) {
        IntVec row;
        for (std::size_t s = 0; s < cg.f->matrix.cols(); ++s) row.push_back(cg.f->matrix(r, s));
        f.push_back(int_vec_to_json(row));
      }
      q["f"] = f;
      q["phi"] = matrix_to_json(*cg.phi);
    }
    quotients.push_back(q);
  }
  json pairs = json::array();
  for (const auto& p : c.undecided)
    pairs.push_back({{"first", p.first}, {"second", p.second}, {"candidates", p.candidates}});
  return {{"algebra", name},
          {"maximalRank", c.maximal.rank()},
          {"maximal", grading_to_json(c.maximal)},
          {"classes", classes},
          {"quotients", quotients},
          {"undecidedPairs", pairs},
          {"counts",
           {{"classes", c.counts.classes},
            {"positive", c.counts.positive},
            {"families", c.counts.families},
            {"quotients", c.counts.quotients},
            {"undecided", c.counts.undecided}}}};
}

json stratification_to_json(const StratificationResult& s) {
  json j = {{"stratifiable", s.stratifiable}};
  if (s.grading) j["grading"] = grading_to_json(*s.grading);
  if (s.derivation) j["derivation"] = matrix_to_json(*s.derivation);
  if (s.certificate) {
    const auto& c = *s.certificate;
    j["certificate"] = {{"i", c[0]}, {"j", c[1]}, {"l", c[2]}, {"description", s.describe_certificate()}};
    j["adaptedBasis"] = matrix_to_json(s.adapted_basis);
  }
  return j;
}

json realization_to_json(const PositiveRealization& r) {
  json weights = json::array();
  for (const auto& x : r.weights) weights.push_back(int_to_json(x));
  return {{"projection", int_vec_to_json(r.w)},
          {"weights", weights},
          {"maxWeight", int_to_json(r.max_weight)},
          {"grading", grading_to_json(r.grading)}};
}

json bound_to_json(const BoundResult& b) {
  return {{"value", to_string(b.value)}, {"maximizer", rat_vec_to_json(b.maximizer)}, {"attained", b.attained}};
}

std::string format_vector(const LieAlgebra& g, const RatVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat c = v[i];
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rat a = abs(c);
    if (a != 1) s += to_string(a) + " ";
    s += g.label(i);
  }
  return s.empty() ? "0" : s;
}

std::string format_grading(const Grading& v) {
  std::string out;
  for (const auto& l : v.layers()) {
    out += "V_" + to_string(l.weight) + " = <";
    for (std::size_t b = 0; b < l.basis.size(); ++b) {
      if (b) out += ", ";
      out += format_vector(v.algebra(), l.basis[b]);
    }
    out += ">\n";
  }
  return out;
}

std::string format_matrix(const Mat& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r].push_back(to_string(m(r, c)));
      width = std::max(width, cells[r].back().size());
    }
  std::string out;
  for (const auto& row : cells) {
    out += "[";
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += " ";
      out += std::string(width - row[c].size(), ' ') + row[c];
    }
    out += "]\n";
  }
  return out;
}

}  // namespace liegrad
