#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/homology.hpp"
#include "morsecat/vector_field.hpp"

namespace morsecat {

enum class TieBreak { lowest_id, highest_id };

struct FiltrationStep {
  enum class Kind { critical, basic_set, gradient_pair };
  Kind kind;
  ObjectId critical_object;          // Kind::critical
  std::size_t basic_set;             // Kind::basic_set, index into decomposition
  std::string gradient_arrow;        // Kind::gradient_pair
  std::vector<ObjectId> added;       // sorted
};

struct Filtration {
  std::vector<FiltrationStep> steps;
  // cumulative[i] = objects of C_i; cumulative[0] is empty, the last entry
  // is every object.
  std::vector<std::vector<ObjectId>> cumulative;
};

namespace detail {

inline std::set<ObjectId> closure_objects(const LoopFreeCategory& cat,
                                          const std::vector<ObjectId>& core) {
  // Union of the under-categories U_d over d in core.
  std::set<ObjectId> out;
  for (const auto& d : core) {
    out.insert(d);
    for (const auto& arrow_id : cat.arrows_in(d))
      out.insert(cat.arrow(arrow_id).src);
  }
  return out;
}

}  // namespace detail

// Builds the vector-field-induced filtration by repeatedly looking at the
// frontier M_i, the minimal objects of the full subcategory on what is not
// yet added, and applying the first clause that fits:
//   (a) add a single critical object from M_i;
//   (b) add a whole recurrent basic set whose punctured closure is already
//       present and whose bottom-degree objects meet M_i;
//   (c) add the endpoint pair of a gradient arrow whose punctured
//       under-neighborhood is already present.
// Ties are broken by id, in the direction given by `tie` (the step order may
// change with the direction; the computed invariants may not).
inline Filtration build_filtration(const LoopFreeCategory& cat,
                                   const Grading& grading,
                                   const VectorField& field,
                                   const MorseDecomposition& decomposition,
                                   TieBreak tie = TieBreak::lowest_id) {
  const std::set<ObjectId> critical = [&] {
    auto v = critical_objects(cat, field);
    return std::set<ObjectId>(v.begin(), v.end());
  }();

  Filtration filtration;
  std::set<ObjectId> added;
  filtration.cumulative.emplace_back();  // C_0

  auto pick = [&](std::vector<std::string> candidates) {
    std::sort(candidates.begin(), candidates.end());
    return tie == TieBreak::lowest_id ? candidates.front() : candidates.back();
  };

  std::vector<bool> basic_set_added(decomposition.basic_sets.size(), false);

  while (added.size() < cat.objects().size()) {
    // Frontier: minimal objects of the full subcategory on the remainder.
    std::vector<ObjectId> frontier;
    for (const auto& o : cat.objects()) {
      if (added.count(o)) continue;
      bool minimal = true;
      for (const auto& arrow_id : cat.arrows_in(o))
        if (!added.count(cat.arrow(arrow_id).src)) {
          minimal = false;
          break;
        }
      if (minimal) frontier.push_back(o);
    }
    if (frontier.empty())
      throw InternalError("empty frontier before the filtration finished");
    const std::set<ObjectId> frontier_set(frontier.begin(), frontier.end());

    FiltrationStep step;

    // (a) critical object on the frontier.
    std::vector<std::string> critical_candidates;
    for (const auto& o : frontier)
      if (critical.count(o)) critical_candidates.push_back(o);
    if (!critical_candidates.empty()) {
      step.kind = FiltrationStep::Kind::critical;
      step.critical_object = pick(std::move(critical_candidates));
      step.added = {step.critical_object};
    } else {
      // (b) recurrent basic set whose punctured closure is already added
      // and whose bottom layer meets the frontier.
      std::vector<std::size_t> set_candidates;
      for (std::size_t i = 0; i < decomposition.basic_sets.size(); ++i) {
        const BasicSet& lambda = decomposition.basic_sets[i];
        if (basic_set_added[i] ||
            lambda.kind != BasicSet::Kind::recurrent)
          continue;
        bool bottom_meets_frontier = false;
        for (const auto& o : lambda.objects)
          if (grading.degree(o) == lambda.index && frontier_set.count(o)) {
            bottom_meets_frontier = true;
            break;
          }
        if (!bottom_meets_frontier) continue;
        std::set<ObjectId> closure =
            detail::closure_objects(cat, lambda.objects);
        for (const auto& o : lambda.objects) closure.erase(o);
        bool ready = true;
        for (const auto& o : closure)
          if (!added.count(o)) {
            ready = false;
            break;
          }
        if (ready) set_candidates.push_back(i);
      }
      if (!set_candidates.empty()) {
        // Basic sets are already ordered by smallest object id.
        std::size_t chosen = tie == TieBreak::lowest_id
                                 ? set_candidates.front()
                                 : set_candidates.back();
        step.kind = FiltrationStep::Kind::basic_set;
        step.basic_set = chosen;
        step.added = decomposition.basic_sets[chosen].objects;
        basic_set_added[chosen] = true;
      } else {
        // (c) gradient pair whose punctured under-neighborhood is present.
        std::vector<std::string> pair_candidates;
        for (const auto& f : decomposition.gradient_part) {
          const Arrow& a = cat.arrow(f);
          if (!frontier_set.count(a.src)) continue;
          LoopFreeCategory hat = under_category(cat, a.tgt, true);
          bool ready = true;
          for (const auto& o : hat.objects())
            if (o != a.src && !added.count(o)) {
              ready = false;
              break;
            }
          if (ready) pair_candidates.push_back(f);
        }
        if (pair_candidates.empty()) throw FiltrationStuck(frontier);
        step.kind = FiltrationStep::Kind::gradient_pair;
        step.gradient_arrow = pick(std::move(pair_candidates));
        const Arrow& a = cat.arrow(step.gradient_arrow);
        step.added = {a.src, a.tgt};
        std::sort(step.added.begin(), step.added.end());
      }
    }

    for (const auto& o : step.added) {
      if (added.count(o))
        throw InternalError("filtration step re-adds object '" + o + "'");
      added.insert(o);
    }
    filtration.cumulative.emplace_back(added.begin(), added.end());
    filtration.steps.push_back(std::move(step));
  }
  return filtration;
}

// Numerical check that every gradient-pair inclusion C_i into C_{i+1}
// preserves the full homology profile (free ranks and torsion alike).
struct CollapsingStepVerdict {
  std::size_t step;  // index into filtration.steps
  bool ok;
  HomologyProfile before, after;
};

struct CollapsingVerdict {
  bool all_ok = true;
  std::vector<CollapsingStepVerdict> gradient_steps;
};

inline CollapsingVerdict verify_collapsing(const LoopFreeCategory& cat,
                                           const Filtration& filtration) {
  CollapsingVerdict verdict;
  for (std::size_t i = 0; i < filtration.steps.size(); ++i) {
    if (filtration.steps[i].kind != FiltrationStep::Kind::gradient_pair)
      continue;
    const auto& before_objects = filtration.cumulative[i];
    const auto& after_objects = filtration.cumulative[i + 1];
    HomologyProfile before = homology(
        full_subcategory(cat, {before_objects.begin(), before_objects.end()}),
        false);
    HomologyProfile after = homology(
        full_subcategory(cat, {after_objects.begin(), after_objects.end()}),
        false);
    bool ok = before == after;
    if (!ok) verdict.all_ok = false;
    verdict.gradient_steps.push_back(
        {i, ok, std::move(before), std::move(after)});
  }
  return verdict;
}

// Homology of the pair (closure, closure minus the set) for one basic set.
inline HomologyProfile basic_set_pair_homology(const LoopFreeCategory& cat,
                                               const BasicSet& lambda) {
  std::set<ObjectId> closure = detail::closure_objects(cat, lambda.objects);
  LoopFreeCategory bar = full_subcategory(cat, closure);
  std::set<ObjectId> boundary = closure;
  for (const auto& o : lambda.objects) boundary.erase(o);
  return relative_homology(bar, boundary);
}

// m_k: the sum over basic sets of the free rank of H_k of the pair
// (closure, closure minus the set).
inline std::vector<int> morse_numbers(const LoopFreeCategory& cat,
                                      const Grading& grading,
                                      const MorseDecomposition& decomposition) {
  (void)grading;
  std::vector<int> m;
  for (const auto& lambda : decomposition.basic_sets) {
    HomologyProfile profile = basic_set_pair_homology(cat, lambda);
    if (profile.betti.size() > m.size()) m.resize(profile.betti.size(), 0);
    for (std::size_t k = 0; k < profile.betti.size(); ++k)
      m[k] += profile.betti[k];
  }
  return m;
}

struct MorseInequalities {
  std::vector<int> m, b;            // zero-padded to a common length
  std::vector<bool> strong_ok;      // alternating partial sums, per degree
  std::vector<bool> weak_ok;        // m_k >= b_k, per degree
  bool euler_ok = true;             // alternating totals agree
  bool all_ok() const {
    for (bool s : strong_ok)
      if (!s) return false;
    for (bool w : weak_ok)
      if (!w) return false;
    return euler_ok;
  }
};

inline MorseInequalities morse_inequalities(std::vector<int> m,
                                            std::vector<int> b) {
  const std::size_t n = std::max(m.size(), b.size());
  m.resize(n, 0);
  b.resize(n, 0);
  MorseInequalities result;
  result.m = m;
  result.b = b;
  int alt_m = 0, alt_b = 0;
  for (std::size_t k = 0; k < n; ++k) {
    alt_m = m[k] - alt_m;
    alt_b = b[k] - alt_b;
    result.strong_ok.push_back(alt_m >= alt_b);
    result.weak_ok.push_back(m[k] >= b[k]);
  }
  int euler_m = 0, euler_b = 0, sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    euler_m += sign * m[k];
    euler_b += sign * b[k];
    sign = -sign;
  }
  result.euler_ok = euler_m == euler_b;
  return result;
}

}  // namespace morsecat
