#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "whlab/cohomology/gmodule.hpp"
#include "whlab/core/errors.hpp"
#include "whlab/core/matrix.hpp"

namespace whlab {

/// Cochain complex of finite-dimensional spaces C^0 -> C^1 -> ...
/// differentials[n] : C^n -> C^{n+1} is a dim C^{n+1} x dim C^n matrix.
struct CochainComplex {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;

  /// One message per n with d^{n+1} d^n != 0 or a shape mismatch.
  std::vector<std::string> violations() const;
  /// dim H^n for n = 0 .. differentials.size() - 1.
  std::vector<std::size_t> cohomology_dims() const;
};

/// Inhomogeneous cochains G^n -> M with
/// (df)(g1..g_{n+1}) = g1 f(g2..) + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^{n+1} f(g1..g_n).
/// Coordinates of f are (g1, ..., gn, j) -> ((g1 |G| + g2) ... ) d + j.
/// Dense matrices; meant for small cases and tests.
CochainComplex hochschild_complex(GModule const& m, std::size_t n_max,
                                  Budget const& budget = Budget::from_environment());

/// Columns of d^n : C^n -> C^{n+1}, one per basis cochain.
std::vector<ResidueColumn> hochschild_differential_columns(GModule const& m, std::size_t n);

struct CohomologyDegree {
  std::size_t n = 0;
  std::size_t dimension = 0;
  /// Rows are cocycles in C^n spanning a complement of the coboundaries, in
  /// reduced echelon form. Filled only when requested.
  Matrix representatives;
};

/// dim H^n(G, M) for n = 0..n_max from ranks of the coboundary maps.
/// Every C^k materialised (k <= n_max + 1) is checked against `budget`.
std::vector<CohomologyDegree> hochschild_cohomology(GModule const& m, std::size_t n_max,
                                                    bool with_representatives = false,
                                                    Budget const& budget = Budget::from_environment());

/// Betti numbers b_0..b_{n_max} of the minimal free resolution of the trivial
/// module over F_p[G]. Requires G to be a p-group for p = char(field).
std::vector<std::size_t> minimal_resolution(FiniteGroupTable const& group, Field field, std::size_t n_max,
                                            Budget const& budget = Budget::from_environment());

}  // namespace whlab
