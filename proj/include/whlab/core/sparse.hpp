#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "whlab/core/matrix.hpp"
#include "whlab/core/scalar.hpp"

namespace whlab {

/// Sparse vector: index -> nonzero scalar.
using SparseVector = std::map<std::size_t, Scalar>;

void axpy(SparseVector& y, Scalar const& a, SparseVector const& x);

/// Incremental echelon basis of a subspace of a sparse coordinate space. The
/// pivot of each row is its smallest index, normalised to 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field field) : field_(field) {}

  Field field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Eliminates every pivot position of `v`.
  SparseVector reduce(SparseVector v) const;
  /// Adds v to the span; returns true if it was independent.
  bool insert(SparseVector v);
  /// Brings all rows to reduced form (no row has a nonzero at another pivot).
  void interreduce();

  bool is_pivot(std::size_t index) const { return rows_.count(index) != 0; }
  /// Rows keyed by pivot index.
  std::map<std::size_t, SparseVector> const& rows() const noexcept { return rows_; }

 private:
  Field field_;
  std::map<std::size_t, SparseVector> rows_;
};

/// Kernel of the linear map sending basis vector i to images[i]. Rows of the
/// result are kernel vectors of length images.size(), in reduced form.
Matrix sparse_kernel(Field field, std::vector<SparseVector> const& images);

/// Rank of the span of the given vectors.
std::size_t sparse_rank(Field field, std::vector<SparseVector> const& vectors);

}  // namespace whlab
