#include "liegrad/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liegrad/classify.hpp"
#include "liegrad/corpus.hpp"
#include "liegrad/errors.hpp"
#include "liegrad/io.hpp"

namespace liegrad {

namespace {

struct Options {
  std::string format = "text";
  std::string output;
  std::string algebra;
  std::string mode = "optimal";
  std::string grading_file;
  std::string forms_file;
  std::string prev_file;
  std::string projection;
  std::string corpus_action;
  std::vector<std::string> names;
  bool serial = false;
};

/// Invalid structure constants are reported like malformed input.
class InvalidAlgebra : public ParseError {
 public:
  using ParseError::ParseError;
};

AlgebraPtr checked_algebra(const std::string& arg) {
  LieAlgebra g = load_algebra(arg);
  Validation v = validate(g);
  if (!v.ok()) throw InvalidAlgebra(v.describe());
  return std::make_shared<const LieAlgebra>(std::move(g));
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Grading chosen_grading(const Options& o, const AlgebraPtr& g) {
  if (o.grading_file.empty()) return maximal_grading(g);
  return grading_from_json(load_json(o.grading_file), g);
}

std::string algebra_name(const LieAlgebra& g, const std::string& arg) {
  if (!g.name.empty()) return g.name;
  return arg;
}

RatVec parse_projection(const std::string& text) {
  RatVec a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(parse_rat(item));
  return a;
}

void cmd_validate(const Options& o, std::ostream& out) {
  LieAlgebra g = load_algebra(o.algebra);
  Validation v = validate(g);
  if (!v.ok()) throw InvalidAlgebra(v.describe());
  if (o.format == "json")
    out << json{{"valid", true}, {"dim", g.dim()}}.dump(2) << "\n";
  else
    out << "valid Lie algebra of dimension " << g.dim() << "\n";
}

void cmd_derivations(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  auto der = derivation_algebra(*g);
  if (o.format == "json") {
    json basis = json::array();
    for (const auto& d : der) basis.push_back(matrix_to_json(d));
    out << json{{"dim", der.size()}, {"basis", basis}}.dump(2) << "\n";
    return;
  }
  out << "dim der = " << der.size() << "\n";
  for (std::size_t i = 0; i < der.size(); ++i) out << "D" << i + 1 << " =\n" << format_matrix(der[i]);
}

void cmd_maximal(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  Grading m = maximal_grading(g);
  if (o.format == "json") {
    out << grading_to_json(m).dump(2) << "\n";
    return;
  }
  out << "maximal grading of rank " << m.rank() << " with " << m.size() << " layers\n" << format_grading(m);
  ProductSplit p = detect_product(m);
  if (p.split()) out << "splits into " << p.parts.size() << " ideals\n";
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  Classification c = classify_gradings(maximal_grading(g), o.serial ? Exec::Serial : Exec::Parallel);
  const std::string name = algebra_name(*g, o.algebra);
  if (o.format == "json") {
    out << classification_to_json(name, c).dump(2) << "\n";
    return;
  }
  out << name << ": maximal rank " << c.maximal.rank() << ", " << c.counts.quotients << " torsion-free quotients, "
      << c.counts.families << " families, " << c.counts.classes << " classes (" << c.counts.undecided
      << " undecided pairs), " << c.counts.positive << " positive\n";
  for (std::size_t i : c.classes()) {
    const auto& cg = c.gradings[i];
    out << "\n[" << i << "] " << to_string(cg.status) << ", rank " << cg.grading.rank()
        << (cg.positive ? ", positive" : "") << "\n"
        << format_grading(cg.grading);
  }
  for (const auto& p : c.undecided)
    out << "\nundecided: [" << p.first << "] vs [" << p.second << "] (" << p.candidates << " candidate isomorphisms)\n";
}

void cmd_stratify(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  StratificationResult s = stratification(g);
  if (o.format == "json") {
    out << stratification_to_json(s).dump(2) << "\n";
    return;
  }
  if (!s.stratifiable) {
    out << "not stratifiable: " << s.describe_certificate() << "\n";
    return;
  }
  out << "stratifiable with " << s.grading->size() << " layers\n"
      << format_grading(*s.grading) << "derivation =\n"
      << format_matrix(*s.derivation);
}

void cmd_positive(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  Grading v = chosen_grading(o, g);
  auto mode = o.mode == "fast" ? RealizationMode::Fast : RealizationMode::Optimal;
  PositiveRealization r = positive_realization(v, mode);
  if (o.format == "json") {
    out << realization_to_json(r).dump(2) << "\n";
    return;
  }
  out << "projection " << to_string(r.w) << ", maximal weight " << r.max_weight << "\n" << format_grading(r.grading);
}

void cmd_heintze(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  Grading v = chosen_grading(o, g);
  RatVec a;
  if (!o.projection.empty()) {
    a = parse_projection(o.projection);
  } else {
    auto mode = v.size() > kOptimalLayerCap ? RealizationMode::Fast : RealizationMode::Optimal;
    a = to_rat(positive_realization(v, mode).w);
  }
  LinMap d = heintze_derivation(v, a);
  if (o.format == "json") {
    out << json{{"projection", [&] {
                   json p = json::array();
                   for (const auto& x : a) p.push_back(to_string(x));
                   return p;
                 }()},
                {"derivation", matrix_to_json(d)}}
               .dump(2)
        << "\n";
    return;
  }
  out << "projection " << to_string(a) << "\nderivation =\n" << format_matrix(d);
}

void cmd_lqp(const Options& o, std::ostream& out) {
  auto g = checked_algebra(o.algebra);
  Grading v = chosen_grading(o, g);
  FormBasis cur = form_basis_from_json(load_json(o.forms_file), g->dim());
  std::optional<FormBasis> prev;
  if (!o.prev_file.empty()) prev = form_basis_from_json(load_json(o.prev_file), g->dim());
  BoundResult b = optimize_bound(v, prev, cur);
  if (o.format == "json") {
    out << bound_to_json(b).dump(2) << "\n";
    return;
  }
  out << "degree " << cur.degree << ": sup = " << to_string(b.value) << " at a = " << to_string(b.maximizer)
      << (b.attained ? " (attained)" : " (not attained in the open cone)") << "\n";
}

struct TableRow {
  std::string name;
  std::size_t rank;
  bool stratifiable;
  ClassificationCounts counts;
  ReferenceRow reference;
};

void cmd_corpus(const Options& o, std::ostream& out) {
  if (o.corpus_action == "list") {
    if (o.format == "json") {
      out << json(corpus_names()).dump(2) << "\n";
      return;
    }
    for (const auto& e : corpus_entries()) out << e.name << "  dim " << e.dim << "  " << e.brackets << "\n";
    return;
  }
  if (o.corpus_action == "show") {
    if (o.names.size() != 1) throw ParseError("corpus show takes one name");
    LieAlgebra g = corpus_algebra(o.names[0]);
    out << dump_algebra(g);
    return;
  }
  if (o.corpus_action != "table2") throw ParseError("unknown corpus action " + o.corpus_action);
  std::vector<std::string> names;
  for (const auto& n : o.names) {
    auto c = canonical_corpus_name(n);
    if (!c) throw ParseError("unknown corpus algebra " + n);
    names.push_back(*c);
  }
  if (names.empty()) names = corpus_names();
  auto rows = ordered_map<TableRow>(
      names.size(),
      [&](std::size_t i) {
        auto g = std::make_shared<const LieAlgebra>(corpus_algebra(names[i]));
        Classification c = classify_gradings(maximal_grading(g), Exec::Serial);
        return TableRow{names[i], c.maximal.rank(), stratification(g).stratifiable, c.counts,
                        corpus_entry(names[i]).reference};
      },
      o.serial ? Exec::Serial : Exec::Parallel);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"algebra", r.name},
                     {"k", r.rank},
                     {"stratifiable", r.stratifiable},
                     {"classes", r.counts.classes},
                     {"families", r.counts.families},
                     {"undecided", r.counts.undecided},
                     {"positive", r.counts.positive},
                     {"reference",
                      {{"k", r.reference.maximal_rank},
                       {"stratifiable", r.reference.stratifiable},
                       {"classes", r.reference.classes},
                       {"positive", r.reference.positive}}}});
    out << arr.dump(2) << "\n";
    return;
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %3s %3s %4s %4s %6s %4s   %s\n", "algebra", "k", "s?", "fam", "#",
                "undec", "#Z+", "reference k/s?/#/#Z+");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-12s %3zu %3s %4zu %4zu %6zu %4zu   %u/%s/%u/%u\n", r.name.c_str(), r.rank,
                  r.stratifiable ? "y" : "n", r.counts.families, r.counts.classes, r.counts.undecided,
                  r.counts.positive, r.reference.maximal_rank, r.reference.stratifiable ? "y" : "n",
                  r.reference.classes, r.reference.positive);
    out << line;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gradings of finite-dimensional Lie algebras over Q", "lie-gradings"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", o.output, "Write results to this file");

  auto algebra_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("algebra", o.algebra, "Algebra file or corpus:NAME")->required();
    c->fallthrough();
    return c;
  };
  algebra_cmd("validate", "Check antisymmetry and the Jacobi identity");
  algebra_cmd("derivations", "Basis of the derivation algebra");
  algebra_cmd("maximal", "Maximal grading");
  algebra_cmd("enumerate", "Torsion-free gradings up to equivalence")->add_flag("--serial", o.serial, "Run single-threaded");
  algebra_cmd("stratify", "Stratification or a non-stratifiability certificate");
  CLI::App* pos = algebra_cmd("positive", "Positive realization of a grading");
  pos->add_option("--mode", o.mode, "optimal or fast")->check(CLI::IsMember({"optimal", "fast"}));
  pos->add_option("--grading", o.grading_file, "Grading file (default: maximal grading)");
  CLI::App* hz = algebra_cmd("heintze", "Derivation acting by positive weights");
  hz->add_option("--grading", o.grading_file, "Grading file (default: maximal grading)");
  hz->add_option("--projection", o.projection, "Comma-separated projection a (default: a positive realization)");
  CLI::App* lq = algebra_cmd("lqp", "Optimize the non-vanishing bound for a degree of forms");
  lq->add_option("--forms", o.forms_file, "Form basis of the current degree")->required();
  lq->add_option("--prev", o.prev_file, "Form basis of the previous degree (default: constants)");
  lq->add_option("--grading", o.grading_file, "Grading file (default: maximal grading)");
  CLI::App* cp = app.add_subcommand("corpus", "Built-in algebras");
  cp->add_option("action", o.corpus_action, "list, show or table2")->required()->check(CLI::IsMember({"list", "show", "table2"}));
  cp->add_option("names", o.names, "Algebra names");
  cp->add_flag("--serial", o.serial, "Run single-threaded");
  cp->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  std::ostringstream buffer;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") cmd_validate(o, buffer);
    else if (cmd == "derivations") cmd_derivations(o, buffer);
    else if (cmd == "maximal") cmd_maximal(o, buffer);
    else if (cmd == "enumerate") cmd_enumerate(o, buffer);
    else if (cmd == "stratify") cmd_stratify(o, buffer);
    else if (cmd == "positive") cmd_positive(o, buffer);
    else if (cmd == "heintze") cmd_heintze(o, buffer);
    else if (cmd == "lqp") cmd_lqp(o, buffer);
    else cmd_corpus(o, buffer);
  } catch (const InvalidAlgebra& e) {
    err << "invalid algebra: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const FieldExtensionRequired& e) {
    err << "error: " << e.what() << "\n" << "minimal polynomial: " << e.polynomial << "\n";
    return kExitFieldExtension;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.output);
    if (!f) {
      err << "error: cannot write " << o.output << "\n";
      return kExitDomainError;
    }
    f << buffer.str();
  }
  return kExitOk;
}

}  // namespace liegrad
