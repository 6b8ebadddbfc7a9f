#pragma once

#include <array>
#include <map>
#include <set>
#include <string>

#include "morsecat/category.hpp"
#include "morsecat/vector_field.hpp"

namespace morsecat {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// Renders the flow graph in the DOT language: one node per object labeled
// "id (degree)", solid edges for vectors, dashed edges for reversed arrows,
// self-loops at critical objects.  Each basic set gets one fill color from
// a fixed palette; gradient-part edges use a reserved color.  Output is
// byte-deterministic: nodes and edges are emitted in sorted order.
inline std::string export_dot(const FlowGraph& flow,
                              const MorseDecomposition& decomposition,
                              const Grading& grading) {
  static constexpr std::array<const char*, 8> palette = {
      "#8dd3c7", "#bebada", "#fb8072", "#80b1d3",
      "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  static constexpr const char* gradient_color = "#ff8c00";

  std::map<ObjectId, std::size_t> basic_set_of;
  for (std::size_t i = 0; i < decomposition.basic_sets.size(); ++i)
    for (const auto& o : decomposition.basic_sets[i].objects)
      basic_set_of[o] = i;
  std::set<std::string> gradient(decomposition.gradient_part.begin(),
                                 decomposition.gradient_part.end());

  auto set_color = [&](std::size_t i) {
    return std::string(palette[i % palette.size()]);
  };

  std::string out = "digraph flow {\n";
  for (const auto& o : flow.nodes) {
    std::string fill = "white";
    if (auto it = basic_set_of.find(o); it != basic_set_of.end())
      fill = set_color(it->second);
    out += "  " + detail::dot_quote(o) + " [label=" +
           detail::dot_quote(o + " (" + std::to_string(grading.degree(o)) +
                             ")") +
           ", style=filled, fillcolor=\"" + fill + "\"];\n";
  }
  for (const auto& e : flow.edges) {
    std::string attrs;
    switch (e.kind) {
      case FlowEdge::Kind::forward:
        attrs = "style=solid";
        break;
      case FlowEdge::Kind::reversed:
        attrs = "style=dashed";
        break;
      case FlowEdge::Kind::critical_loop:
        attrs = "style=solid";
        break;
    }
    std::string color = "black";
    if (e.kind != FlowEdge::Kind::critical_loop && gradient.count(e.origin)) {
      color = gradient_color;
    } else {
      auto from_it = basic_set_of.find(e.from);
      auto to_it = basic_set_of.find(e.to);
      if (from_it != basic_set_of.end() && to_it != basic_set_of.end() &&
          from_it->second == to_it->second)
        color = set_color(from_it->second);
    }
    out += "  " + detail::dot_quote(e.from) + " -> " + detail::dot_quote(e.to) +
           " [" + attrs + ", color=\"" + color + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace morsecat
