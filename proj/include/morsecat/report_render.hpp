#pragma once

#include <string>

#include <json.hpp>

#include "morsecat/report.hpp"

namespace morsecat {

namespace detail {

inline std::string kind_name(FiltrationStep::Kind kind) {
  switch (kind) {
    case FiltrationStep::Kind::critical:
      return "critical";
    case FiltrationStep::Kind::basic_set:
      return "basic_set";
    case FiltrationStep::Kind::gradient_pair:
      return "gradient_pair";
  }
  return "?";
}

inline nlohmann::json profile_json(const HomologyProfile& profile) {
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& degree : profile.torsion) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& d : degree) coeffs.push_back(d.str());
    torsion.push_back(std::move(coeffs));
  }
  return {{"betti", profile.betti}, {"torsion", std::move(torsion)}};
}

}  // namespace detail

// Machine-readable report, mirroring MorseReport field for field.  Keys are
// emitted in sorted order, so identical reports serialize identically.
inline std::string render_structured(const MorseReport& report) {
  nlohmann::json j;

  j["grading"] = nlohmann::json::object();
  for (const auto& [o, d] : report.grading.degrees) j["grading"][o] = d;
  j["vector_field"] = report.field.vectors;
  j["critical_objects"] = report.critical;

  j["basic_sets"] = nlohmann::json::array();
  for (const auto& b : report.decomposition.basic_sets) {
    j["basic_sets"].push_back(
        {{"objects", b.objects},
         {"kind", b.kind == BasicSet::Kind::critical_singleton ? "critical"
                                                               : "recurrent"},
         {"index", b.index},
         {"mixed_index", b.mixed_index}});
  }
  j["chain_recurrent"] = report.decomposition.chain_recurrent;
  j["gradient_part"] = report.decomposition.gradient_part;
  j["vectors_outside_structure"] =
      report.decomposition.vectors_outside_structure;

  j["cellularity"] = {{"ok", report.cellular.cellular},
                      {"objects", nlohmann::json::array()}};
  for (const auto& e : report.cellular.entries) {
    nlohmann::json entry = {{"object", e.object},
                            {"ok", e.ok},
                            {"sphere_count", e.sphere_count}};
    if (!e.ok) entry["reason"] = e.reason;
    j["cellularity"]["objects"].push_back(std::move(entry));
  }
  j["admissibility"] = {{"ok", report.admissibility.admissible},
                        {"failing_arrows", report.admissibility.failing_arrows}};

  j["filtration"] = nlohmann::json::array();
  for (const auto& step : report.filtration.steps) {
    nlohmann::json entry = {{"kind", detail::kind_name(step.kind)},
                            {"added", step.added}};
    if (step.kind == FiltrationStep::Kind::critical)
      entry["object"] = step.critical_object;
    if (step.kind == FiltrationStep::Kind::gradient_pair)
      entry["arrow"] = step.gradient_arrow;
    if (step.kind == FiltrationStep::Kind::basic_set)
      entry["basic_set"] = step.basic_set;
    j["filtration"].push_back(std::move(entry));
  }

  j["collapsing"] = {{"ok", report.collapsing.all_ok},
                     {"gradient_steps", nlohmann::json::array()}};
  for (const auto& s : report.collapsing.gradient_steps) {
    j["collapsing"]["gradient_steps"].push_back(
        {{"step", s.step},
         {"ok", s.ok},
         {"before", detail::profile_json(s.before)},
         {"after", detail::profile_json(s.after)}});
  }

  j["m"] = report.inequalities.m;
  j["b"] = report.inequalities.b;
  j["strong_ok"] = report.inequalities.strong_ok;
  j["weak_ok"] = report.inequalities.weak_ok;
  j["euler_ok"] = report.inequalities.euler_ok;
  j["hypotheses_met"] = report.hypotheses_met();
  j["inequalities_guaranteed"] =
      report.hypotheses_met() && report.inequalities.all_ok();

  return j.dump(2) + "\n";
}

inline std::string render_text(const MorseReport& report) {
  std::string out;
  auto vec_line = [](const char* name, const std::vector<int>& v) {
    std::string line = name;
    line += " =";
    for (std::size_t k = 0; k < v.size(); ++k)
      line += " " + std::to_string(v[k]);
    return line + "\n";
  };

  out += "critical objects:";
  for (const auto& o : report.critical) out += " " + o;
  out += "\n";

  for (const auto& b : report.decomposition.basic_sets) {
    out += "basic set (index " + std::to_string(b.index) + ", ";
    out += b.kind == BasicSet::Kind::critical_singleton ? "critical"
                                                        : "recurrent";
    if (b.mixed_index) out += ", MIXED INDEX";
    out += "): {";
    for (std::size_t i = 0; i < b.objects.size(); ++i)
      out += (i ? " " : "") + b.objects[i];
    out += "}\n";
  }
  out += "gradient part:";
  for (const auto& f : report.decomposition.gradient_part) out += " " + f;
  out += "\n";
  for (const auto& f : report.decomposition.vectors_outside_structure)
    out += "vector outside structure: " + f + "\n";

  out += std::string("cellularity: ") +
         (report.cellular.cellular ? "OK" : "FAILED");
  if (!report.cellular.cellular) {
    out += " at";
    for (const auto& e : report.cellular.entries)
      if (!e.ok) out += " " + e.object;
  }
  out += "\n";
  out += std::string("admissibility: ") +
         (report.admissibility.admissible ? "OK" : "FAILED");
  if (!report.admissibility.admissible) {
    out += " at";
    for (const auto& f : report.admissibility.failing_arrows) out += " " + f;
  }
  out += "\n";

  for (std::size_t i = 0; i < report.filtration.steps.size(); ++i) {
    const auto& step = report.filtration.steps[i];
    out += "step " + std::to_string(i + 1) + ": " +
           detail::kind_name(step.kind) + " {";
    for (std::size_t k = 0; k < step.added.size(); ++k)
      out += (k ? " " : "") + step.added[k];
    out += "}";
    if (step.kind == FiltrationStep::Kind::gradient_pair)
      out += " via " + step.gradient_arrow;
    out += "\n";
  }
  out += std::string("collapsing steps: ") +
         (report.collapsing.all_ok ? "OK" : "FAILED") + "\n";

  out += vec_line("m", report.inequalities.m);
  out += vec_line("b", report.inequalities.b);

  auto all = [](const std::vector<bool>& v) {
    for (bool x : v)
      if (!x) return false;
    return true;
  };
  out += std::string("strong inequalities: ") +
         (all(report.inequalities.strong_ok) ? "OK" : "FAILED") + "\n";
  out += std::string("weak inequalities: ") +
         (all(report.inequalities.weak_ok) ? "OK" : "FAILED") + "\n";
  out += std::string("euler identity: ") +
         (report.inequalities.euler_ok ? "OK" : "FAILED") + "\n";
  if (!report.hypotheses_met())
    out +=
        "note: hypotheses unmet; the inequalities are reported but not "
        "guaranteed\n";
  return out;
}

}  // namespace morsecat
