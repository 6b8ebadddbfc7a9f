#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morsecat/category.hpp"
#include "morsecat/integer_matrix.hpp"

namespace morsecat {

// The order complex of a loop-free category: an m-simplex is a composable
// m-tuple of non-identity arrows, a 0-simplex is an object.  Simplex lists
// are ordered lexicographically by id, which fixes every matrix basis.
class OrderComplex {
 public:
  int dimension() const { return static_cast<int>(tuples_.size()); }

  const std::vector<ObjectId>& vertices() const { return vertices_; }

  // Composable tuples of dimension m >= 1.
  const std::vector<std::vector<std::string>>& tuples(int m) const {
    return tuples_.at(static_cast<std::size_t>(m) - 1);
  }

  std::size_t count(int m) const {
    if (m == 0) return vertices_.size();
    if (m < 0 || m > dimension()) return 0;
    return tuples_[static_cast<std::size_t>(m) - 1].size();
  }

  std::size_t total_count() const {
    std::size_t n = vertices_.size();
    for (const auto& level : tuples_) n += level.size();
    return n;
  }

  std::size_t vertex_index(const ObjectId& o) const {
    return vertex_index_.at(o);
  }
  std::size_t tuple_index(int m, const std::vector<std::string>& t) const {
    return tuple_index_.at(static_cast<std::size_t>(m) - 1).at(t);
  }

 private:
  friend OrderComplex order_complex(const LoopFreeCategory&,
                                    std::optional<int>);

  std::vector<ObjectId> vertices_;
  std::vector<std::vector<std::vector<std::string>>> tuples_;  // [m-1]
  std::map<ObjectId, std::size_t> vertex_index_;
  std::vector<std::map<std::vector<std::string>, std::size_t>> tuple_index_;
};

// Enumerates composable tuples level by level; terminates by acyclicity.
// max_dim caps the construction, defaulting to the full complex.
inline OrderComplex order_complex(const LoopFreeCategory& cat,
                                  std::optional<int> max_dim = std::nullopt) {
  OrderComplex complex;
  complex.vertices_ = cat.objects();
  for (std::size_t i = 0; i < complex.vertices_.size(); ++i)
    complex.vertex_index_[complex.vertices_[i]] = i;

  if (max_dim && *max_dim < 1) return complex;

  std::vector<std::vector<std::string>> level;
  for (const auto& a : cat.arrows()) level.push_back({a.id});
  int m = 1;
  while (!level.empty()) {
    complex.tuples_.push_back(level);
    auto& index = complex.tuple_index_.emplace_back();
    for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = i;

    if (max_dim && m >= *max_dim) break;
    std::vector<std::vector<std::string>> next;
    for (const auto& tuple : level) {
      const Arrow& last = cat.arrow(tuple.back());
      for (const auto& a_id : cat.arrows_out(last.tgt)) {
        auto extended = tuple;
        extended.push_back(a_id);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
    ++m;
  }
  return complex;
}

// A finitely generated chain complex of free abelian groups, with
// boundaries[k] : C_k -> C_{k-1} for 1 <= k <= dim.
struct ChainComplex {
  std::vector<std::size_t> counts;    // counts[k] = rank of C_k
  std::vector<IntMatrix> boundaries;  // boundaries[k] defined for k >= 1

  int dimension() const { return static_cast<int>(counts.size()) - 1; }
};

namespace detail {

// d(a_1,...,a_m) = (a_2,...,a_m)
//                + sum_{i=1}^{m-1} (-1)^i (a_1,...,a_{i+1} o a_i,...,a_m)
//                + (-1)^m (a_1,...,a_{m-1});  for m = 1, d(a) = tgt - src.
inline std::vector<std::pair<std::vector<std::string>, int>> boundary_faces(
    const LoopFreeCategory& cat, const std::vector<std::string>& tuple) {
  std::vector<std::pair<std::vector<std::string>, int>> faces;
  const std::size_t m = tuple.size();
  faces.push_back(
      {std::vector<std::string>(tuple.begin() + 1, tuple.end()), 1});
  int sign = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    sign = -sign;
    std::vector<std::string> face;
    face.reserve(m - 1);
    for (std::size_t j = 0; j < i; ++j) face.push_back(tuple[j]);
    face.push_back(cat.compose(tuple[i + 1], tuple[i]));
    for (std::size_t j = i + 2; j < m; ++j) face.push_back(tuple[j]);
    faces.push_back({std::move(face), sign});
  }
  sign = -sign;
  faces.push_back(
      {std::vector<std::string>(tuple.begin(), tuple.end() - 1), sign});
  return faces;
}

}  // namespace detail

// Boundary matrices of the order complex; entry (row, col) accumulates the
// signed incidences of the col-th m-simplex on the row-th (m-1)-simplex.
inline std::vector<IntMatrix> boundary_matrices(const OrderComplex& complex,
                                                const LoopFreeCategory& cat) {
  std::vector<IntMatrix> matrices;
  matrices.emplace_back(0, complex.count(0));  // placeholder at index 0
  for (int m = 1; m <= complex.dimension(); ++m) {
    IntMatrix bd(complex.count(m - 1), complex.count(m));
    const auto& level = complex.tuples(m);
    for (std::size_t col = 0; col < level.size(); ++col) {
      const auto& tuple = level[col];
      if (m == 1) {
        const Arrow& a = cat.arrow(tuple[0]);
        bd.at(complex.vertex_index(a.tgt), col) += 1;
        bd.at(complex.vertex_index(a.src), col) -= 1;
      } else {
        for (const auto& [face, sign] : detail::boundary_faces(cat, tuple))
          bd.at(complex.tuple_index(m - 1, face), col) += sign;
      }
    }
    matrices.push_back(std::move(bd));
  }
  return matrices;
}

inline ChainComplex chain_complex(const OrderComplex& complex,
                                  const LoopFreeCategory& cat) {
  ChainComplex chain;
  if (complex.count(0) == 0) return chain;
  for (int m = 0; m <= complex.dimension(); ++m)
    chain.counts.push_back(complex.count(m));
  chain.boundaries = boundary_matrices(complex, cat);
  return chain;
}

}  // namespace morsecat
