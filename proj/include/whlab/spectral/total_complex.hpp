#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "whlab/spectral/double_complex.hpp"

namespace whlab {

/// Tot^n = sum over p of K^{p, n-p}, blocks in increasing p, with d = d0 + d1.
/// The column filtration F^p Tot^n is then a suffix of coordinates.
class TotalComplex {
 public:
  explicit TotalComplex(DoubleComplex const& dc);

  std::size_t dimension(std::size_t n) const { return offset(n, n + 1); }
  /// First coordinate of column p in Tot^n; dimension(n) once p > n.
  std::size_t offset(std::size_t n, std::size_t p) const;
  /// Tot^n -> Tot^{n+1}.
  Matrix const& differential(std::size_t n) const;

 private:
  DoubleComplex const& dc_;
  mutable std::map<std::size_t, Matrix> differentials_;
};

}  // namespace whlab
