// Command-line front end: validate category documents, compute homology,
// inspect vector fields and their Morse decompositions, build filtrations,
// emit full reports, and export flow graphs as DOT.
//
// Exit codes: 0 success; 1 malformed input or failed validation; 2 a
// hypothesis check (cellularity, admissibility, mixed index) failed while
// numbers were still produced; 3 a stuck filtration or a broken internal
// invariant.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morsecat/category.hpp"
#include "morsecat/document.hpp"
#include "morsecat/dot_export.hpp"
#include "morsecat/homology.hpp"
#include "morsecat/report.hpp"
#include "morsecat/report_render.hpp"

namespace {

using namespace morsecat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorClass::input, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> resolve_field(const CategoryDocument& doc,
                                       const std::optional<std::string>& vf) {
  if (vf) return split_csv(*vf);
  if (doc.vector_field) return *doc.vector_field;
  return {};
}

std::string profile_line(const std::vector<int>& betti,
                         const std::vector<std::vector<Int>>& torsion) {
  std::string line;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (k) line += " ";
    line += "b_" + std::to_string(k) + "=" + std::to_string(betti[k]);
  }
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    if (torsion[k].empty()) continue;
    line += " t_" + std::to_string(k) + "=";
    for (std::size_t i = 0; i < torsion[k].size(); ++i) {
      if (i) line += ",";
      line += torsion[k][i].str();
    }
  }
  return line;
}

int cmd_validate(const std::string& path) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);
  std::cout << "valid: " << cat.objects().size() << " objects, "
            << cat.arrows().size() << " arrows\n";
  return 0;
}

int cmd_homology(const std::string& path, bool reduced,
                 const std::optional<std::string>& relative_csv,
                 long field_mod) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);

  if (relative_csv) {
    std::set<ObjectId> sub;
    for (const auto& o : split_csv(*relative_csv)) sub.insert(o);
    HomologyProfile profile = relative_homology(cat, sub);
    std::cout << profile_line(profile.betti, profile.torsion) << "\n";
    return 0;
  }
  if (field_mod > 0) {
    OrderComplex complex = order_complex(cat);
    std::vector<int> betti = betti_mod_p(complex, cat, field_mod, reduced);
    std::cout << profile_line(betti, {}) << "\n";
    return 0;
  }
  HomologyProfile profile = homology(cat, reduced);
  std::cout << profile_line(profile.betti, profile.torsion) << "\n";
  return 0;
}

int cmd_morse(const std::string& path, const std::optional<std::string>& vf) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);
  Grading grading = compute_grading(cat);
  VectorField field =
      validate_vector_field(cat, grading, resolve_field(doc, vf));
  MorseDecomposition decomposition = basic_sets(cat, grading, field);
  CellularVerdict cellular = check_cellular(cat, grading);
  AdmissibilityVerdict admissibility =
      check_admissibility(cat, field, decomposition);

  std::cout << "critical objects:";
  for (const auto& o : critical_objects(cat, field)) std::cout << " " << o;
  std::cout << "\n";
  for (const auto& b : decomposition.basic_sets) {
    std::cout << "basic set (index " << b.index << ", "
              << (b.kind == BasicSet::Kind::critical_singleton ? "critical"
                                                               : "recurrent");
    if (b.mixed_index) std::cout << ", MIXED INDEX";
    std::cout << "): {";
    for (std::size_t i = 0; i < b.objects.size(); ++i)
      std::cout << (i ? " " : "") << b.objects[i];
    std::cout << "}\n";
  }
  std::cout << "gradient part:";
  for (const auto& f : decomposition.gradient_part) std::cout << " " << f;
  std::cout << "\n";
  for (const auto& f : decomposition.vectors_outside_structure)
    std::cout << "vector outside structure: " << f << "\n";
  std::cout << "cellularity: " << (cellular.cellular ? "OK" : "FAILED");
  if (!cellular.cellular) {
    std::cout << " at";
    for (const auto& e : cellular.entries)
      if (!e.ok) std::cout << " " << e.object;
  }
  std::cout << "\n";
  std::cout << "admissibility: "
            << (admissibility.admissible ? "OK" : "FAILED");
  if (!admissibility.admissible) {
    std::cout << " at";
    for (const auto& f : admissibility.failing_arrows) std::cout << " " << f;
  }
  std::cout << "\n";

  const bool hypotheses = cellular.cellular && admissibility.admissible &&
                          !decomposition.has_mixed_index();
  return hypotheses ? 0 : 2;
}

int cmd_filtration(const std::string& path,
                   const std::optional<std::string>& vf, TieBreak tie) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);
  Grading grading = compute_grading(cat);
  VectorField field =
      validate_vector_field(cat, grading, resolve_field(doc, vf));
  MorseDecomposition decomposition = basic_sets(cat, grading, field);
  Filtration filtration =
      build_filtration(cat, grading, field, decomposition, tie);
  for (std::size_t i = 0; i < filtration.steps.size(); ++i) {
    const auto& step = filtration.steps[i];
    std::cout << "step " << (i + 1) << ": " << detail::kind_name(step.kind)
              << " {";
    for (std::size_t k = 0; k < step.added.size(); ++k)
      std::cout << (k ? " " : "") << step.added[k];
    std::cout << "}";
    if (step.kind == FiltrationStep::Kind::gradient_pair)
      std::cout << " via " << step.gradient_arrow;
    std::cout << "\n";
  }
  return 0;
}

int cmd_report(const std::string& path, const std::optional<std::string>& vf,
               const std::string& format, TieBreak tie) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);
  MorseReport report = generate_report(cat, resolve_field(doc, vf), tie);
  if (format == "structured")
    std::cout << render_structured(report);
  else
    std::cout << render_text(report);
  return report.hypotheses_met() ? 0 : 2;
}

int cmd_export_dot(const std::string& path,
                   const std::optional<std::string>& vf,
                   const std::string& out_path) {
  CategoryDocument doc = parse_category_document(read_file(path));
  LoopFreeCategory cat = category_from_document(doc);
  Grading grading = compute_grading(cat);
  VectorField field =
      validate_vector_field(cat, grading, resolve_field(doc, vf));
  MorseDecomposition decomposition = basic_sets(cat, grading, field);
  FlowGraph flow = build_flow_graph(cat, field);
  std::string dot = export_dot(flow, decomposition, grading);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorClass::input, "cannot write file: " + out_path);
  out << dot;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse theory toolkit for finite loop-free categories"};
  app.require_subcommand(1);

  std::string file, out_path, format = "text", tie_name = "lowest";
  std::optional<std::string> vf, relative_csv;
  bool reduced = false;
  long field_mod = 0;

  CLI::App* validate = app.add_subcommand("validate", "Check a document");
  validate->add_option("file", file, "category document")->required();

  CLI::App* hom = app.add_subcommand("homology", "Integral homology");
  hom->add_option("file", file, "category document")->required();
  hom->add_flag("--reduced", reduced, "reduced homology");
  hom->add_option("--relative", relative_csv,
                  "comma-separated objects of the subcategory");
  hom->add_option("--field-mod", field_mod,
                  "Betti numbers over the prime field F_p");

  CLI::App* morse = app.add_subcommand("morse", "Morse decomposition");
  morse->add_option("file", file, "category document")->required();
  morse->add_option("--vf", vf, "comma-separated vector arrow ids");

  CLI::App* filt = app.add_subcommand("filtration", "Induced filtration");
  filt->add_option("file", file, "category document")->required();
  filt->add_option("--vf", vf, "comma-separated vector arrow ids");
  filt->add_option("--tie-break", tie_name, "lowest|highest id tie-breaking")
      ->check(CLI::IsMember({"lowest", "highest"}));

  CLI::App* report = app.add_subcommand("report", "Full Morse report");
  report->add_option("file", file, "category document")->required();
  report->add_option("--vf", vf, "comma-separated vector arrow ids");
  report->add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  report->add_option("--tie-break", tie_name, "lowest|highest id tie-breaking")
      ->check(CLI::IsMember({"lowest", "highest"}));

  CLI::App* dot = app.add_subcommand("export-dot", "Flow graph as DOT");
  dot->add_option("file", file, "category document")->required();
  dot->add_option("-o,--output", out_path, "output path")->required();
  dot->add_option("--vf", vf, "comma-separated vector arrow ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const morsecat::TieBreak tie = tie_name == "highest"
                                     ? morsecat::TieBreak::highest_id
                                     : morsecat::TieBreak::lowest_id;
  try {
    if (validate->parsed()) return cmd_validate(file);
    if (hom->parsed()) return cmd_homology(file, reduced, relative_csv,
                                           field_mod);
    if (morse->parsed()) return cmd_morse(file, vf);
    if (filt->parsed()) return cmd_filtration(file, vf, tie);
    if (report->parsed()) return cmd_report(file, vf, format, tie);
    if (dot->parsed()) return cmd_export_dot(file, vf, out_path);
  } catch (const morsecat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
