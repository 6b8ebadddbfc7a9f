#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "morsecat/errors.hpp"

namespace morsecat {

// Arbitrary-precision integer; intermediate entries of a Smith reduction can
// grow far beyond any fixed width.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix.  Complexes here are desk scale, so density is a
// simplification, not a bottleneck.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
      throw InternalError("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j)
          out.at(i, j) += aik * other.at(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SnfResult {
  // Full diagonal of length min(rows, cols): d_1 | d_2 | ..., non-negative,
  // zeros trailing.
  std::vector<Int> diagonal;
  std::size_t rank = 0;
  // Unimodular transforms with row_transform * A * col_transform = diag.
  std::optional<IntMatrix> row_transform;
  std::optional<IntMatrix> col_transform;
};

// Smith normal form by elementary row/column operations.  The pivot is
// always a smallest-magnitude nonzero entry of the remaining block, which
// keeps intermediate growth in check on adversarial inputs.
inline SnfResult smith_normal_form(IntMatrix a, bool with_transforms = false) {
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(rows);
    v = IntMatrix::identity(cols);
  }

  auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {
    // row_i -= q * row_k
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(k, j);
    if (with_transforms)
      for (std::size_t j = 0; j < rows; ++j) u.at(i, j) -= q * u.at(k, j);
  };
  auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {
    // col_j -= q * col_k
    for (std::size_t i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, k);
    if (with_transforms)
      for (std::size_t i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, k);
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(i, j), a.at(k, j));
    if (with_transforms)
      for (std::size_t j = 0; j < rows; ++j) std::swap(u.at(i, j), u.at(k, j));
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a.at(i, j), a.at(i, k));
    if (with_transforms)
      for (std::size_t i = 0; i < cols; ++i) std::swap(v.at(i, j), v.at(i, k));
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = -a.at(i, j);
    if (with_transforms)
      for (std::size_t j = 0; j < rows; ++j) u.at(i, j) = -u.at(i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t k) {
    // row_i += row_k
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) += a.at(k, j);
    if (with_transforms)
      for (std::size_t j = 0; j < rows; ++j) u.at(i, j) += u.at(k, j);
  };

  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest-magnitude nonzero entry of the remaining block becomes the
    // pivot candidate.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int& e = a.at(i, j);
        if (e == 0) continue;
        Int mag = abs(e);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;  // remaining block is zero
    row_swap(t, pi);
    col_swap(t, pj);

    // Clear row and column t.  Any nonzero remainder is strictly smaller
    // than the pivot and replaces it, so this terminates.
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < rows && !again; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        row_op(i, t, q);
        if (a.at(i, t) != 0) {
          row_swap(t, i);
          again = true;
        }
      }
      if (again) continue;
      for (std::size_t j = t + 1; j < cols && !again; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        col_op(j, t, q);
        if (a.at(t, j) != 0) {
          col_swap(t, j);
          again = true;
        }
      }
      if (again) continue;
      // Divisibility chain: if the pivot misses an entry of the remaining
      // block, fold that row in and keep reducing.
      for (std::size_t i = t + 1; i < rows && !again; ++i)
        for (std::size_t j = t + 1; j < cols && !again; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            row_add(t, i);
            again = true;
          }
    }
    if (a.at(t, t) < 0) row_negate(t);
  }

  SnfResult result;
  result.diagonal.resize(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    result.diagonal[i] = a.at(i, i);
    if (result.diagonal[i] != 0) ++result.rank;
  }
  for (std::size_t i = 0; i + 1 < limit; ++i) {
    const Int& d = result.diagonal[i];
    if (d == 0) {
      if (result.diagonal[i + 1] != 0)
        throw InternalError("smith diagonal has a zero before a nonzero");
    } else if (result.diagonal[i + 1] % d != 0) {
      throw InternalError("smith diagonal violates the divisibility chain");
    }
  }
  if (with_transforms) {
    result.row_transform = std::move(u);
    result.col_transform = std::move(v);
  }
  return result;
}

// Matrix rank over the field F_p, by Gaussian elimination on residues.
// Used for the optional prime-field cross-check of Betti numbers.
inline std::size_t rank_mod_p(const IntMatrix& m, long p) {
  if (p < 2) throw InvalidCategory("field characteristic must be at least 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw InvalidCategory("field characteristic must be prime");

  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = static_cast<long>(r);
    }

  auto inv_mod = [&](long x) {
    long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < rows; ++j) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][j] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    long inv = inv_mod(a[rank][j]);
    for (std::size_t jj = j; jj < cols; ++jj)
      a[rank][jj] = a[rank][jj] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][j] == 0) continue;
      long factor = a[i][j];
      for (std::size_t jj = j; jj < cols; ++jj)
        a[i][jj] = ((a[i][jj] - factor * a[rank][jj]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace morsecat
