#pragma once

// Shared hand-built categories used across the suites.

#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/document.hpp"

namespace fixtures {

using morsecat::Arrow;
using morsecat::CategoryData;
using morsecat::LoopFreeCategory;

inline LoopFreeCategory empty_category() {
  return morsecat::validate_category({});
}

// One object, no arrows.
inline LoopFreeCategory point() {
  CategoryData raw;
  raw.objects = {"p"};
  return morsecat::validate_category(raw);
}

// Two objects, one arrow x -> y.
inline LoopFreeCategory interval() {
  CategoryData raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"xy", "x", "y"}};
  return morsecat::validate_category(raw);
}

// Chain x -> y -> z with the forced composite x -> z.
inline LoopFreeCategory chain2() {
  CategoryData raw;
  raw.objects = {"x", "y", "z"};
  raw.arrows = {{"xy", "x", "y"}, {"yz", "y", "z"}, {"xz", "x", "z"}};
  raw.compositions = {{"yz", "xy", "xz"}};
  return morsecat::validate_category(raw);
}

// The fence: minimal a, b under maximal c, d; a poset model of the circle.
inline LoopFreeCategory fence() {
  CategoryData raw;
  raw.objects = {"a", "b", "c", "d"};
  raw.arrows = {{"ac", "a", "c"},
                {"ad", "a", "d"},
                {"bc", "b", "c"},
                {"bd", "b", "d"}};
  return morsecat::validate_category(raw);
}

// Two parallel arrows u, v : x -> y; the order complex is a circle made of
// two edges.
inline LoopFreeCategory parallel_pair() {
  CategoryData raw;
  raw.objects = {"x", "y"};
  raw.arrows = {{"u", "x", "y"}, {"v", "x", "y"}};
  return morsecat::validate_category(raw);
}

// Diamond x < {y, z} < w with an extra indecomposable arrow x -> w running
// parallel to the composite; that arrow skips a degree, so the category is
// not graded.
inline LoopFreeCategory skip_level() {
  CategoryData raw;
  raw.objects = {"w", "x", "y", "z"};
  raw.arrows = {{"xy", "x", "y"}, {"xz", "x", "z"}, {"yw", "y", "w"},
                {"zw", "z", "w"}, {"xw", "x", "w"}, {"xw2", "x", "w"}};
  raw.compositions = {{"yw", "xy", "xw"}, {"zw", "xz", "xw"}};
  return morsecat::validate_category(raw);
}

// Poset built from a generating relation set, through the document layer.
inline LoopFreeCategory poset(const std::vector<std::string>& objects,
                              const std::vector<std::pair<std::string,
                                                          std::string>>&
                                  relations) {
  morsecat::CategoryDocument doc;
  for (const auto& o : objects) doc.objects.push_back({o, std::nullopt});
  doc.poset_relations = relations;
  return morsecat::expand_poset(doc);
}

}  // namespace fixtures
