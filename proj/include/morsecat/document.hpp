#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "morsecat/category.hpp"

namespace morsecat {

// The on-disk category document.  Either explicit arrows + compositions or
// a poset shorthand (a generating set of strict relations), never both.
struct DocumentObject {
  std::string id;
  std::optional<int> degree;
  friend bool operator==(const DocumentObject&, const DocumentObject&) =
      default;
};

struct DocumentArrow {
  std::string id, src, tgt;
  friend bool operator==(const DocumentArrow&, const DocumentArrow&) = default;
};

struct CategoryDocument {
  std::vector<DocumentObject> objects;
  std::vector<DocumentArrow> arrows;
  std::vector<std::array<std::string, 3>> compositions;  // [g, f, g o f]
  std::optional<std::vector<std::string>> vector_field;
  std::optional<std::vector<std::pair<std::string, std::string>>>
      poset_relations;

  bool has_poset() const { return poset_relations.has_value(); }
  friend bool operator==(const CategoryDocument&, const CategoryDocument&) =
      default;
};

namespace detail {

inline const nlohmann::json& expect(const nlohmann::json& j, const char* what,
                                    bool ok) {
  if (!ok) throw ParseError(0, std::string("expected ") + what);
  return j;
}

inline std::string expect_string(const nlohmann::json& j, const char* where) {
  if (!j.is_string())
    throw ParseError(0, std::string(where) + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

// Parses and structurally validates a document: known keys only, unique
// ids, resolvable references, and the arrows/poset exclusivity rule.
inline CategoryDocument parse_category_document(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
  if (!root.is_object())
    throw ParseError(0, "document root must be an object");

  static const std::set<std::string> known_keys = {
      "objects", "arrows", "compositions", "vector_field", "poset"};
  for (const auto& [key, value] : root.items())
    if (!known_keys.count(key)) throw ParseError(0, "unknown key '" + key + "'");

  CategoryDocument doc;

  detail::expect(root, "an 'objects' array", root.contains("objects") &&
                                                 root["objects"].is_array());
  std::set<std::string> ids;
  for (const auto& entry : root["objects"]) {
    DocumentObject object;
    if (entry.is_string()) {
      object.id = entry.get<std::string>();
    } else if (entry.is_object()) {
      object.id = detail::expect_string(entry.at("id"), "object id");
      if (entry.contains("degree")) {
        if (!entry["degree"].is_number_integer())
          throw ParseError(0, "object degree must be an integer");
        object.degree = entry["degree"].get<int>();
      }
      for (const auto& [key, value] : entry.items())
        if (key != "id" && key != "degree")
          throw ParseError(0, "unknown object key '" + key + "'");
    } else {
      throw ParseError(0, "object entries must be strings or objects");
    }
    if (object.id.empty()) throw ParseError(0, "empty object id");
    if (!ids.insert(object.id).second) throw DuplicateId(object.id);
    doc.objects.push_back(std::move(object));
  }
  const std::set<std::string> object_ids = ids;

  if (root.contains("poset") &&
      (root.contains("arrows") || root.contains("compositions")))
    throw ParseError(0,
                     "a document carries either arrows/compositions or a "
                     "poset, not both");

  if (root.contains("arrows")) {
    detail::expect(root["arrows"], "an 'arrows' array",
                   root["arrows"].is_array());
    for (const auto& entry : root["arrows"]) {
      if (!entry.is_object())
        throw ParseError(0, "arrow entries must be objects");
      DocumentArrow arrow;
      arrow.id = detail::expect_string(entry.at("id"), "arrow id");
      arrow.src = detail::expect_string(entry.at("src"), "arrow src");
      arrow.tgt = detail::expect_string(entry.at("tgt"), "arrow tgt");
      for (const auto& [key, value] : entry.items())
        if (key != "id" && key != "src" && key != "tgt")
          throw ParseError(0, "unknown arrow key '" + key + "'");
      if (!ids.insert(arrow.id).second) throw DuplicateId(arrow.id);
      if (!object_ids.count(arrow.src))
        throw DanglingReference(arrow.src, "arrow '" + arrow.id + "'");
      if (!object_ids.count(arrow.tgt))
        throw DanglingReference(arrow.tgt, "arrow '" + arrow.id + "'");
      doc.arrows.push_back(std::move(arrow));
    }
  }
  std::set<std::string> arrow_ids;
  for (const auto& a : doc.arrows) arrow_ids.insert(a.id);

  if (root.contains("compositions")) {
    detail::expect(root["compositions"], "a 'compositions' array",
                   root["compositions"].is_array());
    for (const auto& entry : root["compositions"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw ParseError(0, "composition entries must be [g, f, gf] triples");
      std::array<std::string, 3> triple;
      for (std::size_t i = 0; i < 3; ++i) {
        triple[i] = detail::expect_string(entry[i], "composition entry");
        if (!arrow_ids.count(triple[i]))
          throw DanglingReference(triple[i], "compositions");
      }
      doc.compositions.push_back(std::move(triple));
    }
  }

  if (root.contains("vector_field")) {
    detail::expect(root["vector_field"], "a 'vector_field' array",
                   root["vector_field"].is_array());
    std::vector<std::string> field;
    for (const auto& entry : root["vector_field"]) {
      std::string id = detail::expect_string(entry, "vector_field entry");
      // Poset documents name generated arrows; those resolve after
      // expansion, not here.
      if (!root.contains("poset") && !arrow_ids.count(id))
        throw DanglingReference(id, "vector_field");
      field.push_back(std::move(id));
    }
    doc.vector_field = std::move(field);
  }

  if (root.contains("poset")) {
    const auto& poset = root["poset"];
    if (!poset.is_object() || !poset.contains("relations") ||
        !poset["relations"].is_array())
      throw ParseError(0, "'poset' must be an object with a relations array");
    for (const auto& [key, value] : poset.items())
      if (key != "relations")
        throw ParseError(0, "unknown poset key '" + key + "'");
    for (const auto& id : object_ids)
      if (id.find('<') != std::string::npos)
        throw ParseError(0,
                         "object ids in poset documents must not contain '<' "
                         "(reserved for generated arrow ids)");
    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& entry : poset["relations"]) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError(0, "poset relations must be [lower, upper] pairs");
      std::string lo = detail::expect_string(entry[0], "relation entry");
      std::string hi = detail::expect_string(entry[1], "relation entry");
      if (!object_ids.count(lo)) throw DanglingReference(lo, "poset relations");
      if (!object_ids.count(hi)) throw DanglingReference(hi, "poset relations");
      relations.emplace_back(std::move(lo), std::move(hi));
    }
    doc.poset_relations = std::move(relations);
  }

  return doc;
}

inline std::string serialize_category_document(const CategoryDocument& doc) {
  nlohmann::json root;
  root["objects"] = nlohmann::json::array();
  for (const auto& o : doc.objects) {
    nlohmann::json entry;
    entry["id"] = o.id;
    if (o.degree) entry["degree"] = *o.degree;
    root["objects"].push_back(std::move(entry));
  }
  if (doc.has_poset()) {
    nlohmann::json relations = nlohmann::json::array();
    for (const auto& [lo, hi] : *doc.poset_relations)
      relations.push_back({lo, hi});
    root["poset"] = {{"relations", std::move(relations)}};
  } else {
    root["arrows"] = nlohmann::json::array();
    for (const auto& a : doc.arrows)
      root["arrows"].push_back(
          {{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    root["compositions"] = nlohmann::json::array();
    for (const auto& triple : doc.compositions)
      root["compositions"].push_back({triple[0], triple[1], triple[2]});
  }
  if (doc.vector_field) root["vector_field"] = *doc.vector_field;
  return root.dump(2) + "\n";
}

// Expands the poset shorthand: transitive closure of the relations (cycles
// rejected), one arrow per comparable pair named "lo<hi", and the forced
// composition table.
inline LoopFreeCategory expand_poset(const CategoryDocument& doc) {
  if (!doc.has_poset())
    throw InvalidCategory("document does not use the poset shorthand");

  std::vector<ObjectId> objects;
  for (const auto& o : doc.objects) objects.push_back(o.id);

  std::map<ObjectId, std::set<ObjectId>> succ;
  for (const auto& [lo, hi] : *doc.poset_relations) {
    if (lo == hi) throw CyclicRelation({lo});
    succ[lo].insert(hi);
  }
  if (auto cycle = detail::find_directed_cycle(objects, succ))
    throw CyclicRelation(*cycle);

  // Reachability by depth-first search from each object.
  std::map<ObjectId, std::set<ObjectId>> above;
  auto reach = [&](auto&& self, const ObjectId& o) -> const std::set<ObjectId>& {
    auto it = above.find(o);
    if (it != above.end()) return it->second;
    std::set<ObjectId> acc;
    auto succ_it = succ.find(o);
    if (succ_it != succ.end()) {
      for (const auto& next : succ_it->second) {
        acc.insert(next);
        const auto& more = self(self, next);
        acc.insert(more.begin(), more.end());
      }
    }
    return above.emplace(o, std::move(acc)).first->second;
  };

  CategoryData raw;
  raw.objects = objects;
  auto arrow_id = [](const ObjectId& lo, const ObjectId& hi) {
    return lo + "<" + hi;
  };
  for (const auto& o : objects) {
    for (const auto& upper : reach(reach, o))
      raw.arrows.push_back({arrow_id(o, upper), o, upper});
  }
  for (const auto& lower : objects) {
    for (const auto& mid : above[lower]) {
      for (const auto& upper : above[mid]) {
        raw.compositions.push_back({arrow_id(mid, upper),
                                    arrow_id(lower, mid),
                                    arrow_id(lower, upper)});
      }
    }
  }
  return validate_category(raw);
}

// Builds the category described by a document and verifies any declared
// degrees against the computed grading.
inline LoopFreeCategory category_from_document(const CategoryDocument& doc) {
  LoopFreeCategory cat;
  if (doc.has_poset()) {
    cat = expand_poset(doc);
  } else {
    CategoryData raw;
    for (const auto& o : doc.objects) raw.objects.push_back(o.id);
    for (const auto& a : doc.arrows)
      raw.arrows.push_back({a.id, a.src, a.tgt});
    raw.compositions = doc.compositions;
    cat = validate_category(raw);
  }

  bool any_declared = false;
  for (const auto& o : doc.objects) any_declared |= o.degree.has_value();
  if (any_declared) {
    Grading grading = compute_grading(cat);
    for (const auto& o : doc.objects)
      if (o.degree && *o.degree != grading.degree(o.id))
        throw DegreeMismatch(o.id, *o.degree, grading.degree(o.id));
  }
  return cat;
}

}  // namespace morsecat
