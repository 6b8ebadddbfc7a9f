#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/integer_matrix.hpp"
#include "morsecat/order_complex.hpp"

namespace morsecat {

// Integral homology of a chain complex, reported as free ranks plus torsion
// coefficients per degree.  Vectors are indexed by degree and sized to the
// complex dimension; queries beyond that are zero.
struct HomologyProfile {
  std::vector<int> betti;
  std::vector<std::vector<Int>> torsion;
  bool reduced = false;

  int betti_at(int k) const {
    return (k >= 0 && k < static_cast<int>(betti.size())) ? betti[k] : 0;
  }
  const std::vector<Int>& torsion_at(int k) const {
    static const std::vector<Int> kNone;
    return (k >= 0 && k < static_cast<int>(torsion.size())) ? torsion[k]
                                                            : kNone;
  }
  bool all_zero() const {
    for (int b : betti)
      if (b != 0) return false;
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.reduced != b.reduced) return false;
    int top = std::max(static_cast<int>(std::max(a.betti.size(),
                                                 a.torsion.size())),
                       static_cast<int>(std::max(b.betti.size(),
                                                 b.torsion.size())));
    for (int k = 0; k < top; ++k) {
      if (a.betti_at(k) != b.betti_at(k)) return false;
      if (a.torsion_at(k) != b.torsion_at(k)) return false;
    }
    return true;
  }
};

// H_k = ker d_k / im d_{k+1}: free rank n_k - rank d_k - rank d_{k+1},
// torsion from the Smith diagonal of d_{k+1}.  With `reduced` the
// augmentation C_0 -> Z joins as d_0.
inline HomologyProfile homology_of(const ChainComplex& chain, bool reduced) {
  HomologyProfile profile;
  profile.reduced = reduced;
  const int dim = chain.dimension();
  if (dim < 0) return profile;  // empty complex: every group vanishes

  std::vector<std::size_t> rank(dim + 2, 0);
  std::vector<std::vector<Int>> tors(dim + 2);
  rank[0] = reduced && chain.counts[0] > 0 ? 1 : 0;
  for (int k = 1; k <= dim; ++k) {
    SnfResult snf = smith_normal_form(chain.boundaries[k]);
    rank[k] = snf.rank;
    for (const Int& d : snf.diagonal)
      if (d > 1) tors[k].push_back(d);
    std::sort(tors[k].begin(), tors[k].end());
  }

  profile.betti.resize(dim + 1);
  profile.torsion.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    profile.betti[k] = static_cast<int>(chain.counts[k]) -
                       static_cast<int>(rank[k]) -
                       static_cast<int>(rank[k + 1]);
    profile.torsion[k] = tors[k + 1];
  }
  return profile;
}

inline HomologyProfile homology(const OrderComplex& complex,
                                const LoopFreeCategory& cat, bool reduced) {
  return homology_of(chain_complex(complex, cat), reduced);
}

inline HomologyProfile homology(const LoopFreeCategory& cat, bool reduced) {
  return homology(order_complex(cat), cat, reduced);
}

// Quotient chain complex of K(cat) by the subcomplex spanned by the full
// subcategory on sub_objects.  A simplex survives iff it touches at least
// one object outside sub_objects.
inline ChainComplex relative_chain_complex(
    const LoopFreeCategory& cat, const std::set<ObjectId>& sub_objects) {
  for (const auto& o : sub_objects)
    if (!cat.has_object(o)) throw UnknownObject(o);

  OrderComplex complex = order_complex(cat);

  auto tuple_in_sub = [&](const std::vector<std::string>& tuple) {
    if (!sub_objects.count(cat.arrow(tuple.front()).src)) return false;
    for (const auto& id : tuple)
      if (!sub_objects.count(cat.arrow(id).tgt)) return false;
    return true;
  };

  // Surviving basis indices per dimension.
  std::vector<std::vector<std::size_t>> kept(complex.dimension() + 1);
  for (std::size_t i = 0; i < complex.count(0); ++i)
    if (!sub_objects.count(complex.vertices()[i])) kept[0].push_back(i);
  for (int m = 1; m <= complex.dimension(); ++m) {
    const auto& level = complex.tuples(m);
    for (std::size_t i = 0; i < level.size(); ++i)
      if (!tuple_in_sub(level[i])) kept[m].push_back(i);
  }

  // Trim empty top levels so the quotient reports its true dimension.
  int dim = complex.dimension();
  while (dim >= 0 && kept[dim].empty()) --dim;

  ChainComplex chain;
  if (dim < 0) return chain;
  std::vector<IntMatrix> full = boundary_matrices(complex, cat);
  for (int m = 0; m <= dim; ++m) chain.counts.push_back(kept[m].size());
  chain.boundaries.emplace_back(0, chain.counts[0]);
  for (int m = 1; m <= dim; ++m) {
    IntMatrix bd(kept[m - 1].size(), kept[m].size());
    for (std::size_t col = 0; col < kept[m].size(); ++col)
      for (std::size_t row = 0; row < kept[m - 1].size(); ++row)
        bd.at(row, col) = full[m].at(kept[m - 1][row], kept[m][col]);
    chain.boundaries.push_back(std::move(bd));
  }
  return chain;
}

inline HomologyProfile relative_homology(const LoopFreeCategory& cat,
                                         const std::set<ObjectId>& sub) {
  return homology_of(relative_chain_complex(cat, sub), false);
}

// True iff the category is non-empty and has the reduced homology of a
// point.  The empty category does not qualify.
inline bool is_homologically_trivial(const LoopFreeCategory& cat) {
  if (cat.empty()) return false;
  return homology(cat, true).all_zero();
}

// Alternating sum of Betti numbers, cross-checked against the alternating
// simplex count.
inline int euler_characteristic(const LoopFreeCategory& cat) {
  OrderComplex complex = order_complex(cat);
  HomologyProfile profile = homology(complex, cat, false);
  int via_betti = 0, via_counts = 0, sign = 1;
  for (int k = 0; k <= complex.dimension(); ++k) {
    via_betti += sign * profile.betti_at(k);
    via_counts += sign * static_cast<int>(complex.count(k));
    sign = -sign;
  }
  if (via_betti != via_counts)
    throw InternalError("Euler characteristic mismatch: " +
                        std::to_string(via_betti) + " from ranks vs " +
                        std::to_string(via_counts) + " from simplex counts");
  return via_betti;
}

// Betti numbers over F_p; the prime-field cross-check mode.
inline std::vector<int> betti_mod_p(const OrderComplex& complex,
                                    const LoopFreeCategory& cat, long p,
                                    bool reduced) {
  std::vector<int> betti;
  if (complex.count(0) == 0) return betti;
  std::vector<IntMatrix> bd = boundary_matrices(complex, cat);
  const int dim = complex.dimension();
  std::vector<std::size_t> rank(dim + 2, 0);
  rank[0] = reduced ? 1 : 0;
  for (int k = 1; k <= dim; ++k) rank[k] = rank_mod_p(bd[k], p);
  for (int k = 0; k <= dim; ++k)
    betti.push_back(static_cast<int>(complex.count(k)) -
                    static_cast<int>(rank[k]) -
                    static_cast<int>(rank[k + 1]));
  return betti;
}

}  // namespace morsecat
