#include "leibniz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "leibniz/classifier.hpp"
#include "leibniz/error.hpp"
#include "leibniz/expr.hpp"
#include "leibniz/json.hpp"

namespace leibniz::cli {

namespace {

struct Options {
  std::string action;
  std::string algebra;
  bool all = false;
  std::vector<std::string> alphas;
  std::string grid;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
  bool unicode = false;
  std::string family;
  std::string values;
  std::string matrix;
  bool uncorrected = false;
  bool raw = false;
};

// What a command produces: the same data as JSON and as text lines.
struct Report {
  std::string title;
  Json json;
  std::vector<std::string> lines;
  int code = kPass;
};

// Alpha samples used when a parametric algebra is selected without --alpha.
const std::vector<Rational>& default_alphas() {
  static const std::vector<Rational> alphas = {Rational(3, 16), Rational(-1), Rational(2), Rational(1, 4),
                                               Rational(-1, 4)};
  return alphas;
}

std::vector<const Algebra*> selected_algebras(const Options& o) {
  std::vector<const Algebra*> out;
  if (o.all || o.algebra.empty()) {
    if (!o.all && o.algebra.empty()) throw CLI::ValidationError("--algebra", "give --algebra ID or --all");
    for (const auto& alg : catalog()) out.push_back(&alg);
  } else {
    out.push_back(&algebra_by_id(o.algebra));
  }
  return out;
}

std::vector<Rational> parsed_alphas(const Options& o) {
  std::vector<Rational> out;
  for (const auto& a : o.alphas) out.push_back(Rational::parse(a));
  return out;
}

std::optional<Rational> single_alpha(const Options& o) {
  if (o.alphas.size() > 1) throw CLI::ValidationError("--alpha", "only one alpha is accepted by this command");
  if (o.alphas.empty()) return std::nullopt;
  return Rational::parse(o.alphas.front());
}

// Alphas to run for an algebra: none for constant algebras, the given ones
// (validated) or the admissible defaults for parametric ones.
std::vector<std::optional<Rational>> alphas_for(const Algebra& alg, const std::vector<Rational>& given,
                                                const std::vector<Rational>& defaults) {
  std::vector<std::optional<Rational>> out;
  if (!alg.parametric()) {
    out.emplace_back(std::nullopt);
    return out;
  }
  const auto admissible = [&](const Rational& a) {
    return std::all_of(alg.validity.begin(), alg.validity.end(), [&](const AlphaCondition& c) { return c.holds(a); });
  };
  if (!given.empty()) {
    for (const auto& a : given) {
      check_alpha(alg, a);
      out.emplace_back(a);
    }
  } else {
    for (const auto& a : defaults) {
      if (admissible(a)) out.emplace_back(a);
    }
  }
  return out;
}

std::string alpha_label(const std::optional<Rational>& alpha) { return alpha ? "alpha = " + alpha->str() : "-"; }

std::string basis_name(std::size_t i) { return std::string(1, "efg"[i]); }

std::string vector_string(const Vec3<Poly>& v, bool unicode) {
  std::string out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (v[k].is_zero()) continue;
    std::string coeff = to_string(v[k], unicode);
    if (v[k].size() > 1) coeff = "(" + coeff + ")";
    std::string term;
    if (coeff == "1") {
      term = basis_name(k);
    } else if (coeff == "-1") {
      term = "-" + basis_name(k);
    } else {
      term = coeff + "*" + basis_name(k);
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> product_lines(const Algebra& alg, bool unicode) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec3<Poly> v{alg.sc.at(i, j, 0), alg.sc.at(i, j, 1), alg.sc.at(i, j, 2)};
      if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
      out.push_back("[" + basis_name(i) + "," + basis_name(j) + "] = " + vector_string(v, unicode));
    }
  }
  return out;
}

std::string validity_string(const Algebra& alg) {
  std::string out;
  for (const auto& c : alg.validity) out += (out.empty() ? "" : ", ") + c.str();
  return out;
}

Report cmd_algebras(const Options& o) {
  Report r;
  if (o.action == "show") {
    const Algebra& alg = algebra_by_id(o.algebra);
    r.title = "Algebra " + alg.id;
    r.json = to_json(alg);
    r.lines = product_lines(alg, o.unicode);
    if (!alg.validity.empty()) r.lines.push_back("valid for " + validity_string(alg));
    return r;
  }
  r.title = "Algebras";
  r.json = Json::array();
  for (const auto& alg : catalog()) {
    r.json.push_back(to_json(alg));
    std::string line = alg.id + ": ";
    const auto products = product_lines(alg, o.unicode);
    for (std::size_t i = 0; i < products.size(); ++i) line += (i ? ", " : "") + products[i];
    if (!alg.validity.empty()) line += " (" + validity_string(alg) + ")";
    r.lines.push_back(line);
  }
  return r;
}

Report cmd_check_leibniz(const Options& o) {
  Report r;
  r.title = "Leibniz identity";
  r.json = Json::array();
  std::size_t passed = 0;
  Options all = o;
  all.all = all.all || o.algebra.empty();
  const auto algebras = selected_algebras(all);
  for (const Algebra* alg : algebras) {
    const auto failing = validate_leibniz(*alg);
    Json triples = Json::array();
    for (const auto& t : failing) triples.push_back(basis_name(t[0]) + basis_name(t[1]) + basis_name(t[2]));
    r.json.push_back(Json{{"algebra", alg->id}, {"holds", failing.empty()}, {"failing_triples", triples}});
    if (failing.empty()) {
      ++passed;
      r.lines.push_back(alg->id + ": holds");
    } else {
      r.code = kFailure;
      r.lines.push_back(alg->id + ": fails on " + std::to_string(failing.size()) + " basis triples, first (" +
                        basis_name(failing[0][0]) + "," + basis_name(failing[0][1]) + "," +
                        basis_name(failing[0][2]) + ")");
    }
  }
  r.lines.push_back(std::to_string(passed) + "/" + std::to_string(algebras.size()) +
                    " algebras satisfy the Leibniz identity");
  return r;
}

Report system_report(const ConstraintSystem& sys, const std::string& title, bool unicode) {
  Report r;
  r.title = title;
  r.json = to_json(sys);
  r.lines.push_back(sys.algebra + " (" + (sys.alpha ? "alpha = " + sys.alpha->str() : "alpha symbolic") + "), " +
                    std::to_string(sys.polys.size()) + " polynomials:");
  for (const auto& p : sys.polys) r.lines.push_back(to_string(p, unicode));
  return r;
}

Report cmd_gen_constraints(const Options& o) {
  const Algebra& alg = algebra_by_id(o.algebra);
  const auto alpha = single_alpha(o);
  const ConstraintSystem sys = gen_constraints(alg, alpha);
  return system_report(o.raw ? sys : reduce_system(sys), "Nijenhuis conditions for " + alg.id, o.unicode);
}

ConstraintSystem uncorrected_system(const std::string& id) {
  for (const auto& u : uncorrected_paper_systems()) {
    if (u.algebra != id) continue;
    std::vector<Poly> polys;
    for (const auto& p : u.polys) polys.push_back(parse_poly(p));
    return ConstraintSystem::canonical(id, std::nullopt, std::move(polys));
  }
  throw std::out_of_range("no uncorrected published system for " + id);
}

Report cmd_paper_system(const Options& o) {
  const Algebra& alg = algebra_by_id(o.algebra);
  if (o.uncorrected) return system_report(uncorrected_system(alg.id), "Published system for " + alg.id, o.unicode);
  return system_report(paper_system(alg), "Published system for " + alg.id, o.unicode);
}

GridSpec grid_or(const Options& o, std::string_view fallback) {
  return GridSpec::parse(o.grid.empty() ? fallback : std::string_view(o.grid));
}

Report cmd_compare_systems(const Options& o) {
  Report r;
  r.title = "Generated versus published systems";
  r.json = Json::array();
  const GridSpec grid = grid_or(o, "-2..2");
  const std::vector<Rational> given = parsed_alphas(o);
  static const std::vector<Rational> defaults = {Rational(3, 16), Rational(2), Rational(-1)};
  std::size_t agree = 0;
  const auto algebras = selected_algebras(o);
  for (const Algebra* alg : algebras) {
    const ConstraintSystem generated = gen_constraints(*alg);
    const ConstraintSystem published = o.uncorrected ? uncorrected_system(alg->id) : paper_system(*alg);
    std::vector<Rational> alphas;
    for (const auto& a : alphas_for(*alg, given, defaults)) {
      if (a) alphas.push_back(*a);
    }
    const auto witness = systems_equivalent_on_grid(generated, published, grid, alphas, o.jobs);
    Json entry{{"algebra", alg->id}, {"entries", grid.text}, {"alphas", Json::array()}, {"agree", !witness}};
    for (const auto& a : alphas) entry["alphas"].push_back(a.str());
    if (witness) {
      Json values = Json::array();
      for (const auto& v : witness->values) values.push_back(v.str());
      entry["counterexample"] = Json{{"values", values}, {"alpha", witness->alpha ? Json(witness->alpha->str()) : Json()}};
      std::string point;
      for (std::size_t i = 0; i < 9; ++i) {
        point += (i ? ", " : "") + std::string(var_name(kMatrixVars[i], o.unicode)) + "=" + witness->values[i].str();
      }
      r.lines.push_back(alg->id + ": counterexample at " + point + (witness->alpha ? ", " + alpha_label(witness->alpha) : ""));
      r.code = kFailure;
    } else {
      ++agree;
      r.lines.push_back(alg->id + ": zero sets agree on " + grid.text + (alphas.empty() ? "" : " for " +
                        std::to_string(alphas.size()) + " alpha values"));
    }
    r.json.push_back(entry);
  }
  r.lines.push_back(std::to_string(agree) + "/" + std::to_string(algebras.size()) + " systems agree");
  return r;
}

Report cmd_verify_families(const Options& o) {
  Report r;
  r.title = "Family verification";
  r.json = Json::array();
  std::vector<const Family*> families;
  if (!o.family.empty()) {
    families.push_back(&family_by_id(FamilyId::parse(o.family)));
  } else {
    for (const auto& f : family_catalog()) families.push_back(&f);
  }
  std::size_t verified = 0;
  for (const Family* f : families) {
    const auto residual = verify_family(*f);
    const auto problems = check_family_invariants(*f);
    Json components = Json::array();
    for (const auto& c : residual) {
      components.push_back(Json{{"pair", basis_name(c.pair.i) + basis_name(c.pair.j)},
                                {"coordinate", basis_name(c.coordinate)},
                                {"value", to_string(c.value)}});
    }
    r.json.push_back(Json{{"family", f->id.str()},
                          {"verified", residual.empty() && problems.empty()},
                          {"residual", components},
                          {"invariant_problems", problems}});
    if (residual.empty() && problems.empty()) {
      ++verified;
      continue;
    }
    r.code = kFailure;
    for (const auto& c : residual) {
      r.lines.push_back(f->id.str() + ": residual at (" + basis_name(c.pair.i) + "," + basis_name(c.pair.j) +
                        ") coordinate " + basis_name(c.coordinate) + " = " + to_string(c.value, o.unicode));
    }
    for (const auto& p : problems) r.lines.push_back(p);
  }
  r.lines.push_back(std::to_string(verified) + "/" + std::to_string(families.size()) + " families verified");
  return r;
}

Binding parse_values(std::string_view text) {
  Binding b;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected name=value in --values", pos);
    std::string name;
    for (char c : item.substr(0, eq)) {
      if (c != ' ') name.push_back(c);
    }
    const auto v = var_from_name(name);
    if (!v) throw ParseError("unknown variable '" + name + "'", pos);
    b[*v] = Scalar::parse(item.substr(eq + 1));
    pos = comma + 1;
  }
  return b;
}

std::vector<std::string> matrix_lines(const OperatorMatrix& n) {
  std::vector<std::string> out;
  for (const auto& row : n) out.push_back(row[0].str() + ", " + row[1].str() + ", " + row[2].str());
  return out;
}

Report cmd_instantiate(const Options& o) {
  if (o.family.empty()) throw CLI::ValidationError("--family", "instantiate needs --family");
  const Family& f = family_by_id(FamilyId::parse(o.family));
  const Binding binding = parse_values(o.values);
  const auto alpha = single_alpha(o);
  const OperatorMatrix n = instantiate(f, binding, alpha);
  Report r;
  r.title = "Family " + f.id.str();
  r.json = Json{{"family", f.id.str()},
                {"algebra", f.algebra},
                {"alpha", alpha ? Json(alpha->str()) : Json()},
                {"binding", to_json(binding)},
                {"matrix", matrix_to_string(n)},
                {"nijenhuis", nijenhuis_check(algebra_by_id(f.algebra), n, alpha).empty()}};
  r.lines = matrix_lines(n);
  return r;
}

std::string binding_string(const Binding& b, bool unicode) {
  std::string out;
  for (const auto& [v, value] : b) out += (out.empty() ? "" : ", ") + std::string(var_name(v, unicode)) + "=" + value.str();
  return "{" + out + "}";
}

Report cmd_classify(const Options& o) {
  const Algebra& alg = algebra_by_id(o.algebra);
  const auto alpha = single_alpha(o);
  check_alpha(alg, alpha);
  const OperatorMatrix n = parse_matrix(o.matrix);
  const Classification c = classify(alg, n, alpha);
  Report r;
  r.title = "Classification in " + alg.id;
  r.json = classification_json(alg.id, alpha, n, c);
  r.lines.push_back(std::string("nijenhuis: ") + (c.nijenhuis ? "yes" : "no"));
  for (const auto& m : c.matches) r.lines.push_back(m.family.str() + " " + binding_string(m.binding, o.unicode));
  if (c.nijenhuis && c.matches.empty()) {
    r.lines.push_back("unclassified: no published family contains this operator");
    r.code = kFailure;
  }
  return r;
}

Report cmd_grid(const Options& o) {
  const Algebra& alg = algebra_by_id(o.algebra);
  const auto alpha = single_alpha(o);
  check_alpha(alg, alpha);
  const GridSpec grid = grid_or(o, "-1..1");
  const auto found = grid_search(alg, grid, alpha, o.jobs);
  Report r;
  r.title = "Grid search in " + alg.id;
  Json matrices = Json::array();
  for (const auto& n : found) matrices.push_back(matrix_to_string(n));
  r.json = Json{{"algebra", alg.id},     {"alpha", alpha ? Json(alpha->str()) : Json()},
                {"entries", grid.text},  {"total", grid.points()},
                {"found", found.size()}, {"matrices", matrices}};
  r.lines.push_back(alg.id + " over " + grid.text + (alpha ? " at " + alpha_label(alpha) : "") + ": " +
                    std::to_string(found.size()) + " of " + std::to_string(grid.points()) +
                    " matrices are Nijenhuis operators");
  for (const auto& n : found) r.lines.push_back(matrix_to_string(n));
  return r;
}

Report cmd_fuzz(const Options& o) {
  const FuzzResult result = fuzz_roundtrip(o.seed, o.samples, o.jobs);
  Report r;
  r.title = "Fuzz round trip";
  Json failures = Json::array();
  for (const auto& f : result.failures) failures.push_back(Json{{"family", f.family.str()}, {"detail", f.detail}});
  r.json = Json{{"seed", o.seed}, {"samples", result.samples}, {"failures", failures}};
  for (const auto& f : result.failures) r.lines.push_back(f.family.str() + ": " + f.detail);
  r.lines.push_back("seed " + std::to_string(o.seed) + ": " + std::to_string(result.samples) + " samples, " +
                    std::to_string(result.failures.size()) + " failures");
  if (!result.passed()) r.code = kFailure;
  return r;
}

Report cmd_report(const Options& o) {
  Report r;
  r.title = "Completeness reports";
  r.json = Json::array();
  const GridSpec grid = grid_or(o, "-1..1");
  const std::vector<Rational> given = parsed_alphas(o);
  for (const Algebra* alg : selected_algebras(o)) {
    for (const auto& alpha : alphas_for(*alg, given, default_alphas())) {
      const GridReport rep = completeness_report(*alg, grid, alpha, o.jobs);
      r.json.push_back(to_json(rep));
      std::string line = alg->id + (alpha ? " (" + alpha_label(alpha) + ")" : "") + " over " + grid.text + ": " +
                         std::to_string(rep.found) + " of " + std::to_string(rep.total) + " Nijenhuis, " +
                         std::to_string(rep.unclassified.size()) + " unclassified";
      std::string hits;
      for (const Family* f : families_of(alg->id)) {
        const auto it = rep.family_hits.find(f->id.str());
        if (it != rep.family_hits.end()) hits += (hits.empty() ? "" : ", ") + it->first + ":" + std::to_string(it->second);
      }
      if (!hits.empty()) line += " [" + hits + "]";
      r.lines.push_back(line);
      for (const auto& n : rep.unclassified) r.lines.push_back("  unclassified " + matrix_to_string(n));
      if (!rep.unclassified.empty()) r.code = kFailure;
    }
  }
  return r;
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.json.dump(2) << '\n';
  } else if (format == "markdown") {
    os << "## " << r.title << "\n\n";
    for (const auto& line : r.lines) os << "- " << line << '\n';
  } else {
    for (const auto& line : r.lines) os << line << '\n';
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nijenhuis operators on three-dimensional Leibniz algebras", "nijenhuis"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "markdown"}));
    sub->add_option("--output", o.output, "Write the report to this file");
    sub->add_flag("--unicode", o.unicode, "Print l1..l3 and alpha as ℓ1..ℓ3 and α");
  };
  auto add_algebra = [&](CLI::App* sub, bool allow_all) {
    sub->add_option("--algebra", o.algebra, "Algebra id, A1..A13");
    if (allow_all) sub->add_flag("--all", o.all, "Select every algebra");
  };
  auto add_alpha = [&](CLI::App* sub) { sub->add_option("--alpha", o.alphas, "Value of alpha (rational)"); };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  };

  auto* algebras = app.add_subcommand("algebras", "List the algebras or show one");
  algebras->add_option("action", o.action, "list or show")->check(CLI::IsMember({"list", "show"}));
  add_algebra(algebras, false);
  add_common(algebras);

  auto* check = app.add_subcommand("check-leibniz", "Check the left Leibniz identity symbolically");
  add_algebra(check, true);
  add_common(check);

  auto* gen = app.add_subcommand("gen-constraints", "Polynomial conditions for a Nijenhuis operator");
  add_algebra(gen, false);
  add_alpha(gen);
  gen->add_flag("--raw", o.raw, "Print the residual components without reduction");
  add_common(gen);

  auto* paper = app.add_subcommand("paper-system", "Published conditions for an algebra");
  add_algebra(paper, false);
  paper->add_flag("--uncorrected", o.uncorrected, "Print the system as published, before corrections");
  add_common(paper);

  auto* compare = app.add_subcommand("compare-systems", "Compare generated and published systems on a grid");
  add_algebra(compare, true);
  add_alpha(compare);
  compare->add_option("--grid", o.grid, "Entry set, e.g. -2..2 or 0,1,1/2");
  compare->add_flag("--uncorrected", o.uncorrected, "Compare against the uncorrected published system");
  add_jobs(compare);
  add_common(compare);

  auto* verify = app.add_subcommand("verify-families", "Verify the operator families symbolically");
  verify->add_flag("--all", o.all, "Verify every family (default)");
  verify->add_option("--family", o.family, "Family id, e.g. 2.7/4");
  add_common(verify);

  auto* inst = app.add_subcommand("instantiate", "Instantiate a family at parameter values");
  inst->add_option("--family", o.family, "Family id, e.g. 2.1/2")->required();
  inst->add_option("--values", o.values, "Bindings, e.g. k1=1,l1=2,l2=3");
  add_alpha(inst);
  add_common(inst);

  auto* cls = app.add_subcommand("classify", "Find the families containing an operator");
  add_algebra(cls, false);
  cls->add_option("--matrix", o.matrix, "Rows separated by ';', entries by ','")->required();
  add_alpha(cls);
  add_common(cls);

  auto* grid = app.add_subcommand("grid", "Enumerate Nijenhuis operators with entries in a finite set");
  add_algebra(grid, false);
  add_alpha(grid);
  grid->add_option("--grid", o.grid, "Entry set (default -1..1)");
  add_jobs(grid);
  add_common(grid);

  auto* fuzz = app.add_subcommand("fuzz", "Random instantiate and classify round trips");
  fuzz->add_option("--seed", o.seed, "Random seed");
  fuzz->add_option("--samples", o.samples, "Samples per family");
  add_jobs(fuzz);
  add_common(fuzz);

  auto* report = app.add_subcommand("report", "Completeness report: every grid operator must be classified");
  add_algebra(report, true);
  add_alpha(report);
  report->add_option("--grid", o.grid, "Entry set (default -1..1)");
  add_jobs(report);
  add_common(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  Report r;
  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "algebras") {
      if (o.action.empty()) o.action = "list";
      if (o.action == "show" && o.algebra.empty()) throw CLI::ValidationError("--algebra", "show needs --algebra");
      r = cmd_algebras(o);
    } else if (name == "check-leibniz") {
      r = cmd_check_leibniz(o);
    } else if (name == "gen-constraints" || name == "paper-system" || name == "classify" || name == "grid") {
      if (o.algebra.empty()) throw CLI::ValidationError("--algebra", name + " needs --algebra");
      if (name == "gen-constraints") r = cmd_gen_constraints(o);
      if (name == "paper-system") r = cmd_paper_system(o);
      if (name == "classify") {
        // the classification is a structured answer; JSON unless asked otherwise
        if (sub->get_option("--format")->count() == 0) o.format = "json";
        r = cmd_classify(o);
      }
      if (name == "grid") r = cmd_grid(o);
    } else if (name == "compare-systems") {
      r = cmd_compare_systems(o);
    } else if (name == "verify-families") {
      r = cmd_verify_families(o);
    } else if (name == "instantiate") {
      r = cmd_instantiate(o);
    } else if (name == "fuzz") {
      r = cmd_fuzz(o);
    } else {
      r = cmd_report(o);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SideConditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const RadicalNegative& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const DenominatorVanishes& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string text = render(r, o.format);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.output << '\n';
      return kUsage;
    }
    file << text;
  }
  return r.code;
}

}  // namespace leibniz::cli
