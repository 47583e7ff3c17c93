#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "relhilb/rational.hpp"

namespace relhilb {

/// Sparse rational vector: (index, nonzero value) pairs with strictly increasing index.
using SparseVector = std::vector<std::pair<std::size_t, BigRational>>;

/// a <- a + c * b
void axpy(SparseVector& a, const BigRational& c, const SparseVector& b);

/// Incremental row echelon form. Rows are reduced against existing pivots on insertion;
/// the pivot of a row is its smallest index.
class Echelon {
 public:
  /// Reduces `row` in place; returns true (and keeps it) iff it was independent.
  bool insert(SparseVector row);
  /// Reduces `row` in place against the current pivots.
  void reduce(SparseVector& row) const;
  bool spans(SparseVector row) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_of_;  // column -> row index or -1
};

/// Basis of {c : sum_i c_i * images[i] = 0}. Each basis vector is sparse over the domain.
std::vector<SparseVector> left_kernel(const std::vector<SparseVector>& images);

}  // namespace relhilb
