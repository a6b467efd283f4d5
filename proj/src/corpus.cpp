#include "liegrad/corpus.hpp"

#include <cctype>

#include "liegrad/errors.hpp"

namespace liegrad {

namespace {

std::vector<CorpusEntry> build_entries() {
  // Algebras g x F^d share the brackets of g.
  const std::string L32 = "12=3";
  const std::string L43 = "12=3,13=4";
  const std::string L54 = "41=5,23=5";
  const std::string L55 = "13=4,14=5,32=5";
  const std::string L56 = "12=3,13=4,14=5,23=5";
  const std::string L57 = "12=3,13=4,14=5";
  const std::string L58 = "12=3,14=5";
  const std::string L59 = "12=3,23=4,13=5";
  return {
      {"L_2_1", 2, "", {2, true, 2, 2}},
      {"L_3_1", 3, "", {3, true, 3, 3}},
      {"L_3_2", 3, L32, {2, true, 4, 2}},
      {"L_4_1", 4, "", {4, true, 5, 5}},
      {"L_4_2", 4, L32, {3, true, 11, 6}},
      {"L_4_3", 4, L43, {2, true, 6, 2}},
      {"L_5_1", 5, "", {5, true, 7, 7}},
      {"L_5_2", 5, L32, {4, true, 26, 15}},
      {"L_5_3", 5, L43, {3, true, 22, 9}},
      {"L_5_4", 5, L54, {3, true, 9, 4}},
      {"L_5_5", 5, L55, {2, false, 7, 3}},
      {"L_5_6", 5, L56, {1, false, 2, 1}},
      {"L_5_7", 5, L57, {2, true, 7, 2}},
      {"L_5_8", 5, L58, {3, true, 14, 6}},
      {"L_5_9", 5, L59, {2, true, 5, 2}},
      {"L_6_1", 6, "", {6, true, 11, 11}},
      {"L_6_2", 6, L32, {5, true, 52, 31}},
      {"L_6_3", 6, L43, {4, true, 60, 27}},
      {"L_6_4", 6, L54, {4, true, 29, 13}},
      {"L_6_5", 6, L55, {3, false, 29, 15}},
      {"L_6_6", 6, L56, {2, false, 8, 6}},
      {"L_6_7", 6, L57, {3, true, 31, 11}},
      {"L_6_8", 6, L58, {4, true, 52, 25}},
      {"L_6_9", 6, L59, {3, true, 17, 8}},
      {"L_6_10", 6, "23=4,51=6,24=6", {3, false, 23, 8}},
      {"L_6_11", 6, "12=3,13=5,15=6,23=6,24=6", {1, false, 2, 1}},
      {"L_6_12", 6, "23=4,24=5,31=6,25=6", {2, false, 9, 4}},
      {"L_6_13", 6, "13=4,14=5,32=5,15=6,42=6", {2, false, 8, 3}},
      {"L_6_14", 6, "12=3,13=4,14=5,23=5,25=6,43=6", {1, false, 2, 1}},
      {"L_6_15", 6, "12=3,13=4,14=5,23=5,15=6,24=6", {1, false, 2, 1}},
      {"L_6_16", 6, "12=3,13=4,14=5,25=6,43=6", {2, true, 8, 2}},
      {"L_6_17", 6, "21=3,23=4,24=5,13=6,25=6", {1, false, 2, 1}},
      {"L_6_18", 6, "12=3,13=4,14=5,15=6", {2, true, 8, 2}},
      {"L_6_19(-1)", 6, "12=3,14=5,25=6,43=6", {3, true, 21, 6}},
      {"L_6_20", 6, "12=3,14=5,15=6,23=6", {2, true, 8, 3}},
      {"L_6_21(-1)", 6, "12=3,23=4,13=5,14=6,25=6", {2, true, 6, 2}},
      {"L_6_22(0)", 6, "24=5,41=6,23=6", {3, true, 18, 8}},
      {"L_6_22(1)", 6, "12=3,45=6", {4, true, 32, 15}},
      {"L_6_23", 6, "12=3,14=5,15=6,42=6", {2, false, 8, 4}},
      {"L_6_24(0)", 6, "13=4,34=5,14=6,32=6", {2, false, 8, 4}},
      {"L_6_24(1)", 6, "12=3,23=5,24=5,13=6", {2, false, 5, 2}},
      {"L_6_25", 6, "12=3,13=4,15=6", {3, true, 29, 11}},
      {"L_6_26", 6, "12=3,24=5,14=6", {3, true, 10, 5}},
      {"L_6_27", 6, "12=3,13=4,25=6", {3, true, 32, 13}},
      {"L_6_28", 6, "12=3,23=4,13=5,15=6", {2, true, 8, 3}},
  };
}

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : corpus_entries()) out.push_back(e.name);
  return out;
}

std::optional<std::string> canonical_corpus_name(const std::string& name) {
  std::size_t i = 0;
  auto skip_separators = [&] {
    while (i < name.size() && (name[i] == '_' || name[i] == ',' || name[i] == '{' || name[i] == '}' || name[i] == ' '))
      ++i;
  };
  auto read_int = [&](bool allow_sign) -> std::optional<std::string> {
    std::string s;
    if (allow_sign && i < name.size() && (name[i] == '-' || name[i] == '+')) s += name[i++];
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) s += name[i++];
    if (s.empty() || s == "-" || s == "+") return std::nullopt;
    if (s[0] == '+') s.erase(0, 1);
    return s;
  };
  if (name.empty() || (name[0] != 'L' && name[0] != 'l')) return std::nullopt;
  i = 1;
  skip_separators();
  auto dim = read_int(false);
  if (!dim) return std::nullopt;
  std::string index;
  if (dim->size() == 2 && (i == name.size() || name[i] == '(')) {
    // compact form such as "L42"
    index = dim->substr(1);
    dim = dim->substr(0, 1);
  } else {
    skip_separators();
    auto idx = read_int(false);
    if (!idx) return std::nullopt;
    index = *idx;
  }
  std::string candidate = "L_" + *dim + "_" + index;
  while (i < name.size() && name[i] == '}') ++i;
  if (i < name.size()) {
    std::optional<std::string> param;
    if (name[i] == '(') {
      ++i;
      param = read_int(true);
      if (!param || i >= name.size() || name[i] != ')') return std::nullopt;
      ++i;
    } else {
      skip_separators();
      param = read_int(true);
      if (!param) return std::nullopt;
    }
    if (i != name.size()) return std::nullopt;
    candidate += "(" + *param + ")";
  }
  for (const auto& e : corpus_entries())
    if (e.name == candidate) return candidate;
  return std::nullopt;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  auto canon = canonical_corpus_name(name);
  if (canon)
    for (const auto& e : corpus_entries())
      if (e.name == *canon) return e;
  throw ParseError("unknown corpus algebra \"" + name + "\"");
}

LieAlgebra parse_condensed(std::size_t dim, const std::string& text) {
  std::vector<BracketTerm> terms;
  std::size_t i = 0;
  auto digit = [&](char c) -> std::size_t {
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') throw ParseError("bad condensed bracket \"" + text + "\"");
    return static_cast<std::size_t>(c - '1');
  };
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    if (i + 4 > text.size() || text[i + 2] != '=') throw ParseError("bad condensed bracket \"" + text + "\"");
    terms.push_back({digit(text[i]), digit(text[i + 1]), digit(text[i + 3]), Rat(1)});
    i += 4;
  }
  return algebra_from_brackets(dim, terms);
}

LieAlgebra corpus_algebra(const std::string& name) {
  const CorpusEntry& e = corpus_entry(name);
  LieAlgebra g = parse_condensed(e.dim, e.brackets);
  g.name = e.name;
  for (std::size_t i = 0; i < e.dim; ++i) g.labels.push_back("Y" + std::to_string(i + 1));
  return g;
}

}  // namespace liegrad
