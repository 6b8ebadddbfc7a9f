#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/homology.hpp"

namespace morsecat {

// A validated vector field: a set of indecomposable non-identity arrows
// satisfying the three matching-like conditions checked below.
struct VectorField {
  std::vector<std::string> vectors;  // sorted arrow ids

  bool contains(const std::string& arrow_id) const {
    return std::binary_search(vectors.begin(), vectors.end(), arrow_id);
  }
};

// Condition checks, in order:
//   (0) every element is a non-identity indecomposable arrow;
//   (1) no object is simultaneously a source and a target of vectors;
//   (2) a vector whose arrow type is a singleton is the unique vector out of
//       its source and the unique vector into its target;
//   (3) a vector whose arrow type has several arrows leaves at least one
//       arrow of that type outside the field.
inline VectorField validate_vector_field(
    const LoopFreeCategory& cat, const Grading& grading,
    const std::vector<std::string>& candidate) {
  (void)grading;  // fields are only defined over graded categories

  std::vector<std::string> vectors;
  std::set<std::string> seen;
  for (const auto& id : candidate) {
    if (!cat.has_arrow(id)) throw DanglingReference(id, "vector field");
    if (!seen.insert(id).second) throw DuplicateId(id);
    if (cat.is_composite(id)) throw NotIndecomposable(id);
    vectors.push_back(id);
  }
  std::sort(vectors.begin(), vectors.end());

  std::map<ObjectId, std::vector<std::string>> by_source, by_target;
  for (const auto& id : vectors) {
    const Arrow& a = cat.arrow(id);
    by_source[a.src].push_back(id);
    by_target[a.tgt].push_back(id);
  }

  // (1)
  for (const auto& f : vectors) {
    const Arrow& fa = cat.arrow(f);
    auto it = by_target.find(fa.src);
    if (it != by_target.end()) throw SourceTargetClash(f, it->second.front());
  }

  // (2) and (3)
  for (const auto& f : vectors) {
    const Arrow& fa = cat.arrow(f);
    const std::size_t type_size = cat.hom_size(fa.src, fa.tgt);
    if (type_size == 1) {
      for (const auto& other : by_source[fa.src])
        if (other != f) throw UniquenessViolation(f, other);
      for (const auto& other : by_target[fa.tgt])
        if (other != f) throw UniquenessViolation(f, other);
    } else {
      std::size_t in_field = 0;
      for (const auto& a_id : cat.hom(fa.src, fa.tgt))
        if (seen.count(a_id)) ++in_field;
      if (in_field > type_size - 1) throw FullParallelClass(fa.src, fa.tgt);
    }
  }

  return VectorField{std::move(vectors)};
}

// Objects touched by no vector.
inline std::vector<ObjectId> critical_objects(const LoopFreeCategory& cat,
                                              const VectorField& field) {
  std::set<ObjectId> touched;
  for (const auto& id : field.vectors) {
    const Arrow& a = cat.arrow(id);
    touched.insert(a.src);
    touched.insert(a.tgt);
  }
  std::vector<ObjectId> critical;
  for (const auto& o : cat.objects())
    if (!touched.count(o)) critical.push_back(o);
  return critical;
}

// The flow multigraph: vectors kept forward, every other indecomposable
// arrow reversed, one self-loop per critical object.
struct FlowEdge {
  enum class Kind { forward, reversed, critical_loop };
  ObjectId from, to;
  Kind kind;
  std::string origin;  // arrow id, or the critical object for a self-loop
};

struct FlowGraph {
  std::vector<ObjectId> nodes;  // sorted
  std::vector<FlowEdge> edges;
};

inline FlowGraph build_flow_graph(const LoopFreeCategory& cat,
                                  const VectorField& field) {
  FlowGraph graph;
  graph.nodes = cat.objects();
  for (const auto& a : indecomposable_arrows(cat)) {
    if (field.contains(a.id))
      graph.edges.push_back({a.src, a.tgt, FlowEdge::Kind::forward, a.id});
    else
      graph.edges.push_back({a.tgt, a.src, FlowEdge::Kind::reversed, a.id});
  }
  for (const auto& c : critical_objects(cat, field))
    graph.edges.push_back({c, c, FlowEdge::Kind::critical_loop, c});
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const FlowEdge& a, const FlowEdge& b) {
              return std::tie(a.from, a.to, a.origin) <
                     std::tie(b.from, b.to, b.origin);
            });
  return graph;
}

namespace detail {

// Iterative Tarjan; returns components in a deterministic order (each
// sorted internally, components ordered by their smallest node).
inline std::vector<std::vector<ObjectId>> strongly_connected_components(
    const FlowGraph& graph) {
  const std::size_t n = graph.nodes.size();
  std::map<ObjectId, std::size_t> index_of;
  for (std::size_t i = 0; i < n; ++i) index_of[graph.nodes[i]] = i;

  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& e : graph.edges)
    adjacency[index_of.at(e.from)].push_back(index_of.at(e.to));

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::vector<std::vector<ObjectId>> components;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const std::size_t v = frame.node;
      if (frame.next_edge == 0) {
        order[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (frame.next_edge < adjacency[v].size()) {
        std::size_t w = adjacency[v][frame.next_edge++];
        if (order[w] == kUnvisited) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], order[w]);
      }
      if (descended) continue;
      if (low[v] == order[v]) {
        std::vector<ObjectId> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(graph.nodes[w]);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().node] = std::min(low[frames.back().node], low[v]);
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace detail

struct BasicSet {
  enum class Kind { critical_singleton, recurrent };
  std::vector<ObjectId> objects;  // sorted
  Kind kind;
  int index;          // degree of the critical object, or the lower degree
  bool mixed_index;   // a recurrent component spanning more than two degrees
};

// Morse decomposition data.  Hypothesis violations (mixed-index components,
// vectors with multi-arrow types that sit outside every basic set) are
// recorded rather than thrown so reports can still carry numbers.
struct MorseDecomposition {
  std::vector<BasicSet> basic_sets;        // ordered by smallest object id
  std::vector<ObjectId> chain_recurrent;   // sorted union of basic sets
  std::vector<std::string> gradient_part;  // sorted arrow ids
  std::vector<std::string> vectors_outside_structure;  // sorted arrow ids

  bool has_mixed_index() const {
    for (const auto& b : basic_sets)
      if (b.mixed_index) return true;
    return false;
  }
  bool is_recurrent(const ObjectId& o) const {
    return std::binary_search(chain_recurrent.begin(), chain_recurrent.end(),
                              o);
  }
};

// Basic sets as strongly connected components of the flow graph: critical
// objects qualify through their self-loops, larger components are unions of
// cycles.  Each recurrent component is verified to span exactly the two
// consecutive degrees its cycles alternate between.
inline MorseDecomposition basic_sets(const LoopFreeCategory& cat,
                                     const Grading& grading,
                                     const VectorField& field) {
  const FlowGraph graph = build_flow_graph(cat, field);
  const std::vector<ObjectId> critical = critical_objects(cat, field);
  const std::set<ObjectId> critical_set(critical.begin(), critical.end());

  MorseDecomposition decomposition;
  for (auto& component : detail::strongly_connected_components(graph)) {
    if (component.size() == 1) {
      const ObjectId& o = component.front();
      if (!critical_set.count(o)) continue;  // no self-loop: transient
      decomposition.basic_sets.push_back(
          {std::move(component), BasicSet::Kind::critical_singleton,
           grading.degree(o), false});
      continue;
    }
    int lo = grading.degree(component.front());
    int hi = lo;
    for (const auto& o : component) {
      lo = std::min(lo, grading.degree(o));
      hi = std::max(hi, grading.degree(o));
    }
    decomposition.basic_sets.push_back({std::move(component),
                                        BasicSet::Kind::recurrent, lo,
                                        hi - lo != 1});
  }

  for (const auto& b : decomposition.basic_sets)
    decomposition.chain_recurrent.insert(decomposition.chain_recurrent.end(),
                                         b.objects.begin(), b.objects.end());
  std::sort(decomposition.chain_recurrent.begin(),
            decomposition.chain_recurrent.end());

  std::map<ObjectId, std::size_t> component_of;
  for (std::size_t i = 0; i < decomposition.basic_sets.size(); ++i)
    for (const auto& o : decomposition.basic_sets[i].objects)
      component_of[o] = i;

  for (const auto& f : field.vectors) {
    const Arrow& a = cat.arrow(f);
    auto src_it = component_of.find(a.src);
    auto tgt_it = component_of.find(a.tgt);
    const bool inside_basic_set = src_it != component_of.end() &&
                                  tgt_it != component_of.end() &&
                                  src_it->second == tgt_it->second;
    if (cat.hom_size(a.src, a.tgt) == 1) {
      if (src_it == component_of.end() && tgt_it == component_of.end())
        decomposition.gradient_part.push_back(f);
    } else if (!inside_basic_set) {
      decomposition.vectors_outside_structure.push_back(f);
    }
  }
  return decomposition;
}

// Admissibility: every gradient-part arrow f must leave a homologically
// trivial punctured neighborhood U^_{t(f)} - {s(f)} behind.  The empty
// category is not trivial, so an empty neighborhood fails.
struct AdmissibilityVerdict {
  bool admissible = true;
  std::vector<std::string> failing_arrows;
};

inline AdmissibilityVerdict check_admissibility(
    const LoopFreeCategory& cat, const VectorField& field,
    const MorseDecomposition& decomposition) {
  (void)field;
  AdmissibilityVerdict verdict;
  for (const auto& f : decomposition.gradient_part) {
    const Arrow& a = cat.arrow(f);
    LoopFreeCategory punctured = under_category(cat, a.tgt, true);
    std::set<ObjectId> keep(punctured.objects().begin(),
                            punctured.objects().end());
    keep.erase(a.src);
    if (!is_homologically_trivial(full_subcategory(cat, keep))) {
      verdict.admissible = false;
      verdict.failing_arrows.push_back(f);
    }
  }
  return verdict;
}

// Cellularity: every non-minimal object c must have U^_c with the reduced
// homology of a non-trivial wedge of (r(c)-1)-spheres.  Minimal objects
// pass vacuously.
struct CellularEntry {
  ObjectId object;
  int sphere_count = 0;  // n_c; 0 for minimal objects
  bool ok = true;
  std::string reason;
};

struct CellularVerdict {
  bool cellular = true;
  std::vector<CellularEntry> entries;  // one per object, sorted by id
};

inline CellularVerdict check_cellular(const LoopFreeCategory& cat,
                                      const Grading& grading) {
  CellularVerdict verdict;
  for (const auto& c : cat.objects()) {
    CellularEntry entry;
    entry.object = c;
    if (cat.arrows_in(c).empty()) {  // minimal
      verdict.entries.push_back(std::move(entry));
      continue;
    }
    const int wedge_degree = grading.degree(c) - 1;
    HomologyProfile profile =
        homology(under_category(cat, c, true), /*reduced=*/true);
    const int top = std::max(wedge_degree + 1,
                             static_cast<int>(profile.betti.size()));
    for (int k = 0; k < top && entry.ok; ++k) {
      if (!profile.torsion_at(k).empty()) {
        entry.ok = false;
        entry.reason = "torsion in reduced homology at degree " +
                       std::to_string(k);
      } else if (k != wedge_degree && profile.betti_at(k) != 0) {
        entry.ok = false;
        entry.reason = "reduced homology not concentrated in degree " +
                       std::to_string(wedge_degree);
      }
    }
    if (entry.ok) {
      entry.sphere_count = profile.betti_at(wedge_degree);
      if (entry.sphere_count < 1) {
        entry.ok = false;
        entry.reason = "no sphere in degree " + std::to_string(wedge_degree);
      }
    }
    if (!entry.ok) verdict.cellular = false;
    verdict.entries.push_back(std::move(entry));
  }
  return verdict;
}

}  // namespace morsecat
