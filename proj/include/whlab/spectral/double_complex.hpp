#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "whlab/cohomology/gmodule.hpp"
#include "whlab/core/errors.hpp"
#include "whlab/core/matrix.hpp"

namespace whlab {

/// First-quadrant double complex on the cells 0 <= p <= p_max, 0 <= q <= q_max,
/// p + q <= n_max. vertical(p, q) : K^{p,q} -> K^{p,q+1} and
/// horizontal(p, q) : K^{p,q} -> K^{p+1,q}; maps leaving the window are absent.
///
/// `truncated` marks a window cut out of a larger complex: results that could
/// depend on cells outside it are then flagged as unreliable.
class DoubleComplex {
 public:
  DoubleComplex(Field field, std::size_t p_max, std::size_t q_max, std::size_t n_max,
                std::vector<std::vector<std::size_t>> dims, bool truncated = false);

  Field field() const noexcept { return field_; }
  std::size_t p_max() const noexcept { return p_max_; }
  std::size_t q_max() const noexcept { return q_max_; }
  std::size_t n_max() const noexcept { return n_max_; }
  bool truncated() const noexcept { return truncated_; }

  bool contains(std::size_t p, std::size_t q) const { return p <= p_max_ && q <= q_max_ && p + q <= n_max_; }
  /// 0 outside the window.
  std::size_t dim(std::size_t p, std::size_t q) const;

  /// Zero matrices of the right shape until set; setting a map that leaves the
  /// window or has the wrong shape throws DomainError.
  Matrix const& vertical(std::size_t p, std::size_t q) const;
  Matrix const& horizontal(std::size_t p, std::size_t q) const;
  void set_vertical(std::size_t p, std::size_t q, Matrix m);
  void set_horizontal(std::size_t p, std::size_t q, Matrix m);

  /// Whether H^n(Tot) is unaffected by the window.
  bool total_reliable(std::size_t n) const;

 private:
  std::size_t index(std::size_t p, std::size_t q) const { return p * (q_max_ + 1) + q; }

  Field field_;
  std::size_t p_max_, q_max_, n_max_;
  bool truncated_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> vertical_, horizontal_;
};

/// Checks d0 d0 = 0, d1 d1 = 0 and d0 d1 + d1 d0 = 0; one message per failing
/// cell, naming (p,q).
std::vector<std::string> validate_double_complex(DoubleComplex const& dc);

struct TotalDegree {
  std::size_t n = 0;
  std::size_t dimension = 0;
  bool reliable = true;
};
/// H^n(Tot, d0 + d1) for n = 0 .. n_max.
std::vector<TotalDegree> total_cohomology(DoubleComplex const& dc);

struct PageCell {
  std::size_t p = 0, q = 0;
  std::size_t dimension = 0;
  std::size_t rank_out = 0;  // rank of d_r leaving the cell
  bool reliable = true;
  bool stable = false;  // r >= max(p+1, q+2): no d_r enters or leaves
};

struct Page {
  std::size_t r = 0;
  std::vector<PageCell> cells;  // ordered by (p, q)
  PageCell const* find(std::size_t p, std::size_t q) const;
};

struct SpectralPages {
  std::vector<Page> pages;            // r = 0 .. r_max
  std::vector<PageCell> infinity;     // E_inf at each cell, from the stable page
  std::vector<TotalDegree> totals;
  /// d2 ranks from the zig-zag construction, per cell, same order as pages[2].
  std::vector<std::size_t> zigzag_d2;
  /// E_2 dims computed directly as H(H(K, d0), d1), same order as pages[2].
  std::vector<std::size_t> direct_e2;
};

/// Pages from the filtration by columns: E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1})
/// with Z_s^p = {x in F^p : dx in F^{p+s}}. Needs r_max >= 2. The cycle spaces
/// are dense, so Tot^n is checked against `budget` as a square matrix.
SpectralPages spectral_pages(DoubleComplex const& dc, std::size_t r_max,
                             Budget const& budget = Budget::from_environment());

/// Lyndon-Hochschild-Serre double complex for a normal subgroup H of G:
/// K^{p,q} = cochains G/H^p -> A^q, with A^q the H-equivariant maps G^{q+1} -> M.
/// d1 is the G/H bar coboundary, d0 = (-1)^p times the pointwise coboundary of A.
DoubleComplex lhs_double_complex(GModule const& m, std::vector<std::size_t> const& subgroup,
                                 std::size_t p_max, std::size_t q_max, std::size_t n_max,
                                 Budget const& budget = Budget::from_environment());

}  // namespace whlab
