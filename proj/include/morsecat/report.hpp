#pragma once

#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/filtration.hpp"
#include "morsecat/homology.hpp"
#include "morsecat/vector_field.hpp"

namespace morsecat {

// Everything the end-to-end pipeline produces for one category and one
// vector field.  Hypothesis failures (cellularity, admissibility, mixed
// index) do not abort the pipeline; they are carried as flags and downgrade
// the inequality verdicts from "guaranteed" to merely "observed".
struct MorseReport {
  Grading grading;
  VectorField field;
  std::vector<ObjectId> critical;
  MorseDecomposition decomposition;
  CellularVerdict cellular;
  AdmissibilityVerdict admissibility;
  Filtration filtration;
  CollapsingVerdict collapsing;
  MorseInequalities inequalities;

  bool hypotheses_met() const {
    return cellular.cellular && admissibility.admissible &&
           !decomposition.has_mixed_index();
  }
};

inline MorseReport generate_report(const LoopFreeCategory& cat,
                                   const std::vector<std::string>& candidate,
                                   TieBreak tie = TieBreak::lowest_id) {
  MorseReport report;
  report.grading = compute_grading(cat);
  report.field = validate_vector_field(cat, report.grading, candidate);
  report.critical = critical_objects(cat, report.field);
  report.decomposition = basic_sets(cat, report.grading, report.field);
  report.cellular = check_cellular(cat, report.grading);
  report.admissibility =
      check_admissibility(cat, report.field, report.decomposition);
  report.filtration = build_filtration(cat, report.grading, report.field,
                                       report.decomposition, tie);
  report.collapsing = verify_collapsing(cat, report.filtration);
  std::vector<int> m = morse_numbers(cat, report.grading, report.decomposition);
  std::vector<int> b = homology(cat, false).betti;
  report.inequalities = morse_inequalities(std::move(m), std::move(b));
  return report;
}

}  // namespace morsecat
