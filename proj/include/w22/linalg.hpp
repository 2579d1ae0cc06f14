#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "w22/rational.hpp"

namespace w22::linalg {

/// Sparse rational vector: (index, value) pairs, indices strictly increasing,
/// no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// a + c * b.
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b);

/// Row-echelon basis with leftmost pivots. Each stored row has leading
/// coefficient 1 at its pivot.
class EchelonBasis {
 public:
  /// Residual of v after eliminating every pivot it touches (left to right).
  SparseVector reduce(SparseVector v) const;
  /// Adds v if it is independent of the span; returns whether it was added.
  bool insert(SparseVector v);
  /// Adds an already reduced, nonzero residual.
  void insert_reduced(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }
  /// Back-substitutes so every pivot column is zero in all other rows.
  void make_reduced();
  /// Rows in pivot order.
  std::vector<SparseVector> rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  std::map<std::size_t, SparseVector> rows_;
};

/// Kernel of the linear map sending basis vector j to columns[j]. Returned in
/// reduced row-echelon form over column indices, leftmost pivots.
std::vector<SparseVector> nullspace(const std::vector<SparseVector>& columns);

}  // namespace w22::linalg
