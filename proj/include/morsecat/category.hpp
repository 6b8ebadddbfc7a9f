#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morsecat/errors.hpp"

namespace morsecat {

using ObjectId = std::string;

// A non-identity arrow.  Identities are implicit throughout: they are never
// stored, never composed explicitly, and never appear in simplices.
struct Arrow {
  std::string id;
  ObjectId src;
  ObjectId tgt;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Raw category data as it comes out of a document or a test builder.
// `compositions` holds triples (g, f, h) meaning h = g after f, required
// exactly when tgt(f) == src(g).
struct CategoryData {
  std::vector<ObjectId> objects;
  std::vector<Arrow> arrows;
  std::vector<std::array<std::string, 3>> compositions;
};

class LoopFreeCategory;
LoopFreeCategory validate_category(const CategoryData& raw);

// A finite loop-free category with explicit composition.  Instances are
// immutable and only constructed through validate_category, so every value
// of this type satisfies the axioms: total composition on composable pairs,
// associativity, and acyclicity of the underlying object digraph.
class LoopFreeCategory {
 public:
  LoopFreeCategory() = default;

  const std::vector<ObjectId>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  bool empty() const { return objects_.empty(); }

  bool has_object(const ObjectId& id) const {
    return std::binary_search(objects_.begin(), objects_.end(), id);
  }
  bool has_arrow(const std::string& id) const {
    return arrow_index_.count(id) > 0;
  }

  const Arrow& arrow(const std::string& id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) throw DanglingReference(id, "arrow lookup");
    return arrows_[it->second];
  }

  // Composite g after f; the pair must be composable.
  const std::string& compose(const std::string& g_id,
                             const std::string& f_id) const {
    auto it = compose_.find({g_id, f_id});
    if (it == compose_.end())
      throw InternalError("compose called on a non-composable pair (" + g_id +
                          ", " + f_id + ")");
    return it->second;
  }

  bool is_composite(const std::string& arrow_id) const {
    return composite_values_.count(arrow_id) > 0;
  }

  // Arrow ids leaving / entering an object, sorted.
  const std::vector<std::string>& arrows_out(const ObjectId& o) const {
    return lookup_adjacency(out_, o);
  }
  const std::vector<std::string>& arrows_in(const ObjectId& o) const {
    return lookup_adjacency(in_, o);
  }

  // The hom-set C(a, b) as a sorted list of arrow ids.
  std::vector<std::string> hom(const ObjectId& a, const ObjectId& b) const {
    auto it = hom_.find({a, b});
    if (it == hom_.end()) return {};
    return it->second;
  }
  std::size_t hom_size(const ObjectId& a, const ObjectId& b) const {
    auto it = hom_.find({a, b});
    return it == hom_.end() ? 0 : it->second.size();
  }

  const std::map<std::pair<std::string, std::string>, std::string>&
  compositions() const {
    return compose_;
  }

  CategoryData data() const {
    CategoryData raw;
    raw.objects = objects_;
    raw.arrows = arrows_;
    for (const auto& [pair, h] : compose_)
      raw.compositions.push_back({pair.first, pair.second, h});
    return raw;
  }

 private:
  friend LoopFreeCategory validate_category(const CategoryData&);

  static const std::vector<std::string>& lookup_adjacency(
      const std::map<ObjectId, std::vector<std::string>>& table,
      const ObjectId& o) {
    static const std::vector<std::string> kEmpty;
    auto it = table.find(o);
    return it == table.end() ? kEmpty : it->second;
  }

  std::vector<ObjectId> objects_;  // sorted
  std::vector<Arrow> arrows_;      // sorted by id
  std::map<std::string, std::size_t> arrow_index_;
  std::map<std::pair<std::string, std::string>, std::string> compose_;
  std::set<std::string> composite_values_;
  std::map<ObjectId, std::vector<std::string>> out_, in_;
  std::map<std::pair<ObjectId, ObjectId>, std::vector<std::string>> hom_;
};

namespace detail {

// Finds a directed cycle in the object digraph, returned as the object
// sequence of one loop (first object repeats implicitly).
inline std::optional<std::vector<ObjectId>> find_directed_cycle(
    const std::vector<ObjectId>& objects,
    const std::map<ObjectId, std::set<ObjectId>>& succ) {
  enum class Mark { unseen, active, done };
  std::map<ObjectId, Mark> mark;
  for (const auto& o : objects) mark[o] = Mark::unseen;

  std::vector<ObjectId> path;
  std::optional<std::vector<ObjectId>> cycle;

  auto dfs = [&](auto&& self, const ObjectId& v) -> bool {
    mark[v] = Mark::active;
    path.push_back(v);
    auto it = succ.find(v);
    if (it != succ.end()) {
      for (const auto& w : it->second) {
        if (mark[w] == Mark::done) continue;
        if (mark[w] == Mark::active) {
          auto start = std::find(path.begin(), path.end(), w);
          cycle = std::vector<ObjectId>(start, path.end());
          return true;
        }
        if (self(self, w)) return true;
      }
    }
    path.pop_back();
    mark[v] = Mark::done;
    return false;
  };

  for (const auto& o : objects) {
    if (mark[o] == Mark::unseen && dfs(dfs, o)) break;
  }
  return cycle;
}

}  // namespace detail

// Checks every category axiom on raw data and returns the validated value.
// Validation is total and deterministic; the first violation found (in the
// fixed order: identifiers, endpoints, acyclicity, composition table shape,
// completeness, associativity) is thrown with a witness.
inline LoopFreeCategory validate_category(const CategoryData& raw) {
  LoopFreeCategory cat;

  // Objects: non-empty unique ids.
  std::set<ObjectId> object_set;
  for (const auto& o : raw.objects) {
    if (o.empty()) throw InvalidCategory("empty object id");
    if (!object_set.insert(o).second) throw DuplicateId(o);
  }
  cat.objects_.assign(object_set.begin(), object_set.end());

  // Arrows: unique ids, declared endpoints.  A self-arrow is already a
  // directed cycle.
  std::set<std::string> arrow_ids;
  for (const auto& a : raw.arrows) {
    if (a.id.empty()) throw InvalidCategory("empty arrow id");
    if (object_set.count(a.id) > 0)
      throw DuplicateId(a.id);  // ids share one namespace across kinds
    if (!arrow_ids.insert(a.id).second) throw DuplicateId(a.id);
    if (!object_set.count(a.src))
      throw BadEndpoints("arrow '" + a.id + "' has undeclared source '" +
                         a.src + "'");
    if (!object_set.count(a.tgt))
      throw BadEndpoints("arrow '" + a.id + "' has undeclared target '" +
                         a.tgt + "'");
    if (a.src == a.tgt) throw CyclicCategory({a.src});
  }
  cat.arrows_ = raw.arrows;
  std::sort(cat.arrows_.begin(), cat.arrows_.end(),
            [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  for (std::size_t i = 0; i < cat.arrows_.size(); ++i)
    cat.arrow_index_[cat.arrows_[i].id] = i;

  // Acyclicity of the object digraph.
  std::map<ObjectId, std::set<ObjectId>> succ;
  for (const auto& a : cat.arrows_) succ[a.src].insert(a.tgt);
  if (auto cycle = detail::find_directed_cycle(cat.objects_, succ))
    throw CyclicCategory(*cycle);

  // Composition table shape.
  for (const auto& [g_id, f_id, h_id] : raw.compositions) {
    for (const std::string* id : {&g_id, &f_id, &h_id})
      if (!arrow_ids.count(*id))
        throw DanglingReference(*id, "composition table");
    const Arrow& g = cat.arrow(g_id);
    const Arrow& f = cat.arrow(f_id);
    const Arrow& h = cat.arrow(h_id);
    if (f.tgt != g.src)
      throw BadEndpoints("composition entry (" + g_id + ", " + f_id +
                         ") is not composable: tgt(" + f_id + ") = " + f.tgt +
                         " but src(" + g_id + ") = " + g.src);
    if (h.src != f.src || h.tgt != g.tgt)
      throw BadEndpoints("composite '" + h_id + "' of (" + g_id + ", " + f_id +
                         ") must run " + f.src + " -> " + g.tgt);
    auto [it, inserted] = cat.compose_.try_emplace({g_id, f_id}, h_id);
    if (!inserted && it->second != h_id)
      throw BadEndpoints("conflicting composition entries for (" + g_id +
                         ", " + f_id + ")");
  }

  // Completeness: every composable pair of stored arrows has an entry.
  for (const auto& f : cat.arrows_) {
    for (const auto& g : cat.arrows_) {
      if (f.tgt != g.src) continue;
      if (!cat.compose_.count({g.id, f.id}))
        throw MissingComposition(g.id, f.id);
    }
  }

  // Associativity, by exhaustive enumeration over composable triples.
  for (const auto& f : cat.arrows_) {
    for (const auto& g : cat.arrows_) {
      if (g.src != f.tgt) continue;
      const std::string& gf = cat.compose(g.id, f.id);
      for (const auto& h : cat.arrows_) {
        if (h.src != g.tgt) continue;
        const std::string& hg = cat.compose(h.id, g.id);
        if (cat.compose(h.id, gf) != cat.compose(hg, f.id))
          throw NonAssociative(h.id, g.id, f.id);
      }
    }
  }

  for (const auto& [pair, h] : cat.compose_) cat.composite_values_.insert(h);
  for (const auto& a : cat.arrows_) {
    cat.out_[a.src].push_back(a.id);
    cat.in_[a.tgt].push_back(a.id);
    cat.hom_[{a.src, a.tgt}].push_back(a.id);
  }
  return cat;
}

// Arrows that never occur as a composition-table value.  By finiteness every
// arrow is a finite composite of these.
inline std::vector<Arrow> indecomposable_arrows(const LoopFreeCategory& cat) {
  std::vector<Arrow> out;
  for (const auto& a : cat.arrows())
    if (!cat.is_composite(a.id)) out.push_back(a);
  return out;
}

struct ExtremalObjects {
  std::vector<ObjectId> minimal;  // no incoming non-identity arrow
  std::vector<ObjectId> maximal;  // no outgoing non-identity arrow
};

inline ExtremalObjects extremal_objects(const LoopFreeCategory& cat) {
  ExtremalObjects out;
  for (const auto& o : cat.objects()) {
    if (cat.arrows_in(o).empty()) out.minimal.push_back(o);
    if (cat.arrows_out(o).empty()) out.maximal.push_back(o);
  }
  return out;
}

// The full subcategory on `keep`: all arrows with both endpoints kept, with
// the composition table restricted.  Fullness keeps composites, so the
// result is again a valid loop-free category.
inline LoopFreeCategory full_subcategory(const LoopFreeCategory& cat,
                                         const std::set<ObjectId>& keep) {
  CategoryData raw;
  for (const auto& o : keep) {
    if (!cat.has_object(o)) throw UnknownObject(o);
    raw.objects.push_back(o);
  }
  std::set<std::string> kept_arrows;
  for (const auto& a : cat.arrows()) {
    if (keep.count(a.src) && keep.count(a.tgt)) {
      raw.arrows.push_back(a);
      kept_arrows.insert(a.id);
    }
  }
  for (const auto& [pair, h] : cat.compositions()) {
    if (kept_arrows.count(pair.first) && kept_arrows.count(pair.second))
      raw.compositions.push_back({pair.first, pair.second, h});
  }
  return validate_category(raw);
}

// U_c: the full subcategory on the sources of arrows into c together with c
// itself (contributed by the identity at c).  Punctured drops c.
inline LoopFreeCategory under_category(const LoopFreeCategory& cat,
                                       const ObjectId& c, bool punctured) {
  if (!cat.has_object(c)) throw UnknownObject(c);
  std::set<ObjectId> keep;
  for (const auto& arrow_id : cat.arrows_in(c))
    keep.insert(cat.arrow(arrow_id).src);
  if (!punctured) keep.insert(c);
  return full_subcategory(cat, keep);
}

// Degree function: zero on minimal objects, and raised by exactly one along
// every indecomposable arrow.
struct Grading {
  std::map<ObjectId, int> degrees;

  int degree(const ObjectId& o) const {
    auto it = degrees.find(o);
    if (it == degrees.end()) throw UnknownObject(o);
    return it->second;
  }
  int max_degree() const {
    int m = 0;
    for (const auto& [o, d] : degrees) m = std::max(m, d);
    return m;
  }
};

// Assigns r(c) = length of a longest indecomposable path from a minimal
// object to c, then verifies that every indecomposable arrow raises the
// degree by exactly 1.  Longest path is well defined by finite acyclicity,
// and any grading satisfying the definition must agree with it.
inline Grading compute_grading(const LoopFreeCategory& cat) {
  const std::vector<Arrow> indec = indecomposable_arrows(cat);

  // Longest path over the indecomposable digraph in topological order.
  std::map<ObjectId, std::vector<const Arrow*>> incoming;
  std::map<ObjectId, int> pending;
  for (const auto& o : cat.objects()) pending[o] = 0;
  for (const auto& a : indec) {
    incoming[a.tgt].push_back(&a);
    pending[a.tgt] += 1;
  }

  Grading grading;
  std::vector<ObjectId> ready;
  for (const auto& [o, deg_in] : pending)
    if (deg_in == 0) ready.push_back(o);
  std::map<ObjectId, std::vector<const Arrow*>> outgoing;
  for (const auto& a : indec) outgoing[a.src].push_back(&a);

  while (!ready.empty()) {
    ObjectId o = ready.back();
    ready.pop_back();
    int r = 0;
    for (const Arrow* a : incoming[o])
      r = std::max(r, grading.degrees.at(a->src) + 1);
    grading.degrees[o] = r;
    for (const Arrow* a : outgoing[o]) {
      if (--pending[a->tgt] == 0) ready.push_back(a->tgt);
    }
  }
  if (grading.degrees.size() != cat.objects().size())
    throw InternalError("grading topological sort missed objects");

  for (const auto& a : indec) {
    int jump = grading.degrees.at(a.tgt) - grading.degrees.at(a.src);
    if (jump != 1) throw NotGraded(a.id, jump);
  }
  return grading;
}

}  // namespace morsecat
