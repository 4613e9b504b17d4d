// Command-line front end: generate the canonical complexes, run the axiom
// checkers, enumerate cells and atoms, and drive the excision of extremals.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 validation failure,
// 4 internal soundness alarm.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parity/axioms.hpp"
#include "parity/cells.hpp"
#include "parity/excision.hpp"
#include "parity/generators.hpp"
#include "parity/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitAlarm = 4;

struct CliError {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitUsage, "cannot open file: " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot open file for writing: " + path};
  out << text;
}

parity::Complex load_or_fail(const std::string& path) {
  const auto loaded = parity::load_complex(read_input(path));
  if (loaded) return *loaded.complex;
  std::string message = loaded.message;
  if (loaded.report) message += "\n" + parity::report_text(*loaded.report);
  throw CliError{loaded.error == parity::LoadErrorKind::syntax ? kExitParse
                                                               : kExitValidation,
                 message};
}

parity::Subset subset_arg(const parity::Complex& c, const std::string& csv) {
  std::vector<std::string> names;
  std::string current;
  for (char ch : csv) {
    if (ch == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) names.push_back(current);
  auto subset = parity::Subset::from_names(c, names);
  if (!subset) throw CliError{kExitValidation, subset.error()};
  return *subset;
}

parity::Cell cell_arg(const parity::Complex& c,
                      const std::vector<std::string>& lists) {
  auto cell = parity::Cell::make(subset_arg(c, lists.at(0)), subset_arg(c, lists.at(1)));
  if (!cell) throw CliError{kExitValidation, "not a cell: " + cell.error()};
  return *cell;
}

std::string cell_line(const parity::Cell& cell) {
  return "M={" + parity::subset_csv(cell.m()) + "} P={" +
         parity::subset_csv(cell.p()) + "}";
}

int run_gen(const std::string& family_name, unsigned n, const std::string& out_path) {
  auto family = parity::family_from_name(family_name);
  if (!family) throw CliError{kExitUsage, "unknown family: " + family_name};
  auto complex = parity::generate(*family, n);
  if (!complex) throw CliError{kExitUsage, complex.error()};
  write_output(out_path, parity::serialize_complex(*complex));
  return kExitOk;
}

int run_check(const std::string& path, const std::string& axioms_csv, bool as_json) {
  const std::string text = read_input(path);
  auto doc = parity::parse_document(text);
  if (!doc) throw CliError{kExitParse, doc.error()};
  auto complex = parity::build_complex(*doc);
  if (!complex) throw CliError{kExitValidation, complex.error()};

  std::vector<parity::AxiomTag> tags;
  if (axioms_csv.empty()) {
    tags = parity::all_axioms();
  } else {
    std::string current;
    std::vector<std::string> parts;
    for (char ch : axioms_csv + ",") {
      if (ch == ',') {
        if (!current.empty()) parts.push_back(current);
        current.clear();
      } else {
        current += ch;
      }
    }
    for (const auto& part : parts) {
      auto tag = parity::axiom_from_name(part);
      if (!tag) throw CliError{kExitUsage, "unknown axiom: " + part};
      tags.push_back(*tag);
    }
  }

  bool all_pass = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (auto tag : tags) {
    const auto report = parity::check_axiom(*complex, tag);
    all_pass = all_pass && report.pass;
    if (as_json)
      reports.push_back(parity::report_json(report));
    else
      std::cout << parity::report_text(report) << "\n";
  }
  if (as_json) std::cout << reports.dump(2) << "\n";
  return all_pass ? kExitOk : kExitValidation;
}

int run_atoms(const std::string& path, const std::string& element,
              bool require_all) {
  const parity::Complex complex = load_or_fail(path);
  std::vector<parity::ElementId> targets;
  if (!element.empty()) {
    auto x = complex.find(element);
    if (!x) throw CliError{kExitValidation, "unknown element id: " + element};
    targets.push_back(*x);
  } else {
    targets = complex.elements();
  }
  bool all_relevant = true;
  for (parity::ElementId x : targets) {
    auto cell = parity::atom(complex, x);
    if (cell) {
      std::cout << complex.name(x) << ": " << cell_line(*cell) << "\n";
    } else {
      all_relevant = false;
      std::cout << complex.name(x) << ": not relevant (" << cell.error() << ")\n";
    }
  }
  return (require_all && !all_relevant) ? kExitValidation : kExitOk;
}

int run_cells(const std::string& path, std::size_t max_universe) {
  const parity::Complex complex = load_or_fail(path);
  auto cells = parity::enumerate_cells(complex, max_universe);
  if (!cells) throw CliError{kExitUsage, cells.error()};
  std::cout << "cells: " << cells->size() << "\n";
  for (const auto& cell : *cells) std::cout << cell_line(cell) << "\n";
  return kExitOk;
}

parity::ExcisionOptions excision_options(bool assume_tight, bool alt_step1) {
  parity::ExcisionOptions opts;
  if (assume_tight) opts.tightness = parity::TightnessMode::assume;
  opts.alt_level_rule = alt_step1;
  return opts;
}

int run_excise(const std::string& path, const std::vector<std::string>& cell_lists,
               bool assume_tight, bool alt_step1) {
  const parity::Complex complex = load_or_fail(path);
  const parity::Cell cell = cell_arg(complex, cell_lists);
  auto step = parity::excise(cell, excision_options(assume_tight, alt_step1));
  if (!step) throw CliError{kExitValidation, step.error()};
  std::cout << "level: " << step->level << "\n"
            << "case: "
            << (step->side == parity::ExcisionStep::Side::minimal ? "x" : "y")
            << "\n"
            << "pivot: " << complex.name(step->pivot) << "\n"
            << "early: " << cell_line(step->early) << "\n"
            << "late: " << cell_line(step->late) << "\n";
  return kExitOk;
}

int run_decompose(const std::string& path, const std::vector<std::string>& cell_lists,
                  bool verify, bool assume_tight, bool alt_step1) {
  const parity::Complex complex = load_or_fail(path);
  const parity::Cell cell = cell_arg(complex, cell_lists);
  auto tree = parity::decompose(cell, excision_options(assume_tight, alt_step1));
  if (!tree) throw CliError{kExitValidation, tree.error()};
  std::cout << parity::tree_to_text(*tree, complex) << "\n";
  if (verify) {
    auto rebuilt = parity::evaluate(*tree, complex);
    if (!rebuilt)
      throw parity::soundness_error("decomposition does not evaluate: " +
                                    rebuilt.error());
    if (!(*rebuilt == cell))
      throw parity::soundness_error("decomposition evaluates to a different cell");
    std::cout << "verified: recomposition matches\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& tree_path,
               const std::vector<std::string>& cell_lists) {
  const parity::Complex complex = load_or_fail(path);
  const parity::Cell cell = cell_arg(complex, cell_lists);
  auto tree = parity::tree_from_text(read_input(tree_path), complex);
  if (!tree) throw CliError{kExitParse, tree.error()};
  auto rebuilt = parity::evaluate(*tree, complex);
  if (!rebuilt) throw CliError{kExitValidation, rebuilt.error()};
  if (*rebuilt == cell) {
    std::cout << "match\n";
    return kExitOk;
  }
  std::cout << "mismatch: tree evaluates to " << cell_line(*rebuilt) << "\n";
  return kExitValidation;
}

int run_diagram(const std::string& path, const std::vector<std::string>& cell_lists,
                const std::string& format) {
  if (format != "dot") throw CliError{kExitUsage, "unsupported format: " + format};
  const parity::Complex complex = load_or_fail(path);
  std::optional<parity::Cell> highlight;
  if (!cell_lists.empty()) highlight = cell_arg(complex, cell_lists);

  std::ostringstream out;
  out << "digraph complex {\n  rankdir=LR;\n";
  auto mark = [&](parity::ElementId x) -> std::string {
    if (!highlight) return "";
    const bool in_m = highlight->m().contains(x);
    const bool in_p = highlight->p().contains(x);
    if (in_m && in_p) return " [mp]";
    if (in_m) return " [m]";
    if (in_p) return " [p]";
    return "";
  };
  for (parity::ElementId x : complex.elements()) {
    if (complex.dim(x) != 0) continue;
    out << "  \"" << complex.name(x) << "\"";
    if (highlight && (highlight->m().contains(x) || highlight->p().contains(x)))
      out << " [style=filled]";
    out << ";\n";
  }
  for (parity::ElementId e : complex.elements()) {
    if (complex.dim(e) != 1) continue;
    for (parity::ElementId a : complex.faces_of(e, parity::Sign::minus).members())
      for (parity::ElementId b : complex.faces_of(e, parity::Sign::plus).members())
        out << "  \"" << complex.name(a) << "\" -> \"" << complex.name(b)
            << "\" [label=\"" << complex.name(e) << mark(e) << "\"];\n";
  }
  std::string annotations;
  for (parity::ElementId f : complex.elements()) {
    if (complex.dim(f) != 2) continue;
    annotations += complex.name(f) + mark(f) + ": {" +
                   parity::subset_csv(complex.faces_of(f, parity::Sign::minus)) +
                   "} => {" +
                   parity::subset_csv(complex.faces_of(f, parity::Sign::plus)) +
                   "}\\n";
  }
  if (!annotations.empty()) out << "  label=\"" << annotations << "\";\n";
  out << "}\n";
  std::cout << out.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite parity complexes: axioms, cells, and excision of extremals"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a generator complex document");
  std::string gen_family;
  unsigned gen_n = 0;
  std::string gen_out = "-";
  gen->add_option("family", gen_family, "simplex | cube | glob")->required();
  gen->add_option("n", gen_n, "dimension parameter")->required();
  gen->add_option("-o,--output", gen_out, "output file ('-' for stdout)");

  // check
  auto* check = app.add_subcommand("check", "run axiom checkers on a document");
  std::string check_file;
  std::string check_axioms;
  bool check_json = false;
  check->add_option("file", check_file, "complex document ('-' for stdin)")->required();
  check->add_option("--axioms", check_axioms,
                    "comma-separated subset of pre,1,2,3a,3b,r1,r2,as");
  check->add_flag("--json", check_json, "emit reports as JSON");

  // atoms
  auto* atoms = app.add_subcommand("atoms", "list relevant elements and their atoms");
  std::string atoms_file, atoms_element;
  bool atoms_require_all = false;
  atoms->add_option("file", atoms_file)->required();
  atoms->add_option("--element", atoms_element, "restrict to one element id");
  atoms->add_flag("--require-all", atoms_require_all,
                  "exit nonzero if any element is not relevant");

  // cells
  auto* cells = app.add_subcommand("cells", "enumerate all cells by brute force");
  std::string cells_file;
  std::size_t cells_cap = 16;
  cells->add_option("file", cells_file)->required();
  cells->add_option("--max-universe", cells_cap, "enumeration guard (default 16)");

  // excise
  auto* excise = app.add_subcommand("excise", "one excision step");
  std::string excise_file;
  std::vector<std::string> excise_cell;
  bool excise_assume = false, excise_alt = false;
  excise->add_option("file", excise_file)->required();
  excise->add_option("--cell", excise_cell, "M-IDS P-IDS (two comma-separated lists)")
      ->expected(2)
      ->required();
  excise->add_flag("--assume-tight", excise_assume, "skip the tightness check");
  excise->add_flag("--alt-step1", excise_alt, "use the intersection level rule");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "full composition tree");
  std::string dec_file;
  std::vector<std::string> dec_cell;
  bool dec_verify = false, dec_assume = false, dec_alt = false;
  decompose->add_option("file", dec_file)->required();
  decompose->add_option("--cell", dec_cell, "M-IDS P-IDS")->expected(2)->required();
  decompose->add_flag("--verify", dec_verify, "re-evaluate the tree and compare");
  decompose->add_flag("--assume-tight", dec_assume, "skip the tightness check");
  decompose->add_flag("--alt-step1", dec_alt, "use the intersection level rule");

  // verify
  auto* verify = app.add_subcommand("verify", "evaluate a tree file against a cell");
  std::string ver_file, ver_tree;
  std::vector<std::string> ver_cell;
  verify->add_option("file", ver_file)->required();
  verify->add_option("--tree", ver_tree, "composition tree file")->required();
  verify->add_option("--cell", ver_cell, "M-IDS P-IDS")->expected(2)->required();

  // diagram
  auto* diagram = app.add_subcommand("diagram", "emit a DOT digraph of the 1-skeleton");
  std::string dia_file, dia_format = "dot";
  std::vector<std::string> dia_cell;
  diagram->add_option("file", dia_file)->required();
  diagram->add_option("--cell", dia_cell, "M-IDS P-IDS")->expected(2);
  diagram->add_option("--format", dia_format, "output format (dot)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_family, gen_n, gen_out);
    if (check->parsed()) return run_check(check_file, check_axioms, check_json);
    if (atoms->parsed()) return run_atoms(atoms_file, atoms_element, atoms_require_all);
    if (cells->parsed()) return run_cells(cells_file, cells_cap);
    if (excise->parsed())
      return run_excise(excise_file, excise_cell, excise_assume, excise_alt);
    if (decompose->parsed())
      return run_decompose(dec_file, dec_cell, dec_verify, dec_assume, dec_alt);
    if (verify->parsed()) return run_verify(ver_file, ver_tree, ver_cell);
    if (diagram->parsed()) return run_diagram(dia_file, dia_cell, dia_format);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const parity::soundness_error& e) {
    std::cerr << "soundness alarm: " << e.what() << "\n";
    return kExitAlarm;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
