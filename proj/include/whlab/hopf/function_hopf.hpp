#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "whlab/core/matrix.hpp"
#include "whlab/hopf/finite_group.hpp"

namespace whlab {

/// Hopf algebra of F_p-valued functions on a finite group, in the basis of
/// point indicators e_g. Structure maps are matrices acting on flattened
/// tensor indices (g1, ..., gk) -> g1 n^(k-1) + ... + gk.
class FunctionHopf {
 public:
  /// Builds all structure maps and verifies the Hopf axioms; throws
  /// DomainError listing the first violation.
  FunctionHopf(FiniteGroupTable group, Field field);

  FiniteGroupTable const& group() const noexcept { return group_; }
  Field field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return group_.order(); }

  Matrix const& product() const noexcept { return product_; }      // n x n^2, pointwise
  Matrix const& unit() const noexcept { return unit_; }            // n x 1, constant 1
  Matrix const& coproduct() const noexcept { return coproduct_; }  // n^2 x n
  Matrix const& counit() const noexcept { return counit_; }        // 1 x n, value at identity
  Matrix const& antipode() const noexcept { return antipode_; }    // n x n, e_g -> e_{g^-1}

  /// Sparse tensor over the basis: key = (g1, ..., gk).
  using Tensor = std::map<std::vector<std::size_t>, Scalar>;

  /// Applies `map` (taking `in` factors to `out` factors) at factor `pos`.
  Tensor apply_at(Tensor const& t, Matrix const& map, std::size_t in, std::size_t out,
                  std::size_t pos) const;
  Tensor basis(std::vector<std::size_t> const& key) const;

  /// Every axiom checked on every basis tensor; empty when all hold.
  std::vector<std::string> violations() const;

 private:
  FiniteGroupTable group_;
  Field field_;
  Matrix product_, unit_, coproduct_, counit_, antipode_;
};

}  // namespace whlab
