#include <algorithm>
#include <map>
#include <tuple>

#include "whlab/spectral/double_complex.hpp"
#include "whlab/spectral/total_complex.hpp"

namespace whlab {

PageCell const* Page::find(std::size_t p, std::size_t q) const {
  for (auto const& c : cells)
    if (c.p == p && c.q == q) return &c;
  return nullptr;
}

namespace {

// A subspace of Tot^n: either the coordinate suffix from `start` on, or the
// row span of `rows` (full width, not necessarily independent).
struct Space {
  bool coordinate = false;
  std::size_t start = 0;
  Matrix rows;
  std::size_t total = 0;

  // only meaningful when `rows` is a basis
  std::size_t dim() const { return coordinate ? total - start : rows.rows(); }
};

// dim(a + b)
std::size_t sum_dim(Space const& a, Space const& b) {
  if (a.coordinate && b.coordinate) return a.total - std::min(a.start, b.start);
  if (b.coordinate) return sum_dim(b, a);
  if (a.coordinate) return a.dim() + rank(b.rows.block(0, 0, b.rows.rows(), a.start));
  return rank(vstack(a.rows, b.rows));
}

class Filtration {
 public:
  Filtration(DoubleComplex const& dc, Budget const& budget) : dc_(dc), tot_(dc), budget_(budget) {}

  // {x in F^from Tot^n : dx in F^to Tot^{n+1}}
  Space const& cycles(std::size_t n, std::size_t from, std::size_t to) {
    std::size_t dim = tot_.dimension(n), start = tot_.offset(n, from), end = tot_.offset(n + 1, to);
    auto key = std::make_tuple(n, start, end);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Space z{true, start, Matrix(dc_.field(), 0, dim), dim};
    Matrix block = tot_.differential(n).block(0, start, end, dim - start);
    if (!block.is_zero()) {
      budget_.check_dense(dim - start, dim, 32, "filtration cycles");
      Matrix k = kernel_basis(block);
      z.coordinate = false;
      z.rows = Matrix(dc_.field(), k.rows(), dim);
      z.rows.paste(k, 0, start);
    }
    return cache_.emplace(key, std::move(z)).first->second;
  }

  // d Z(n-1, from, to), spanned by possibly dependent rows
  Space boundaries(std::size_t n, std::size_t from, std::size_t to) {
    std::size_t dim = tot_.dimension(n);
    Space b{false, 0, Matrix(dc_.field(), 0, dim), dim};
    if (n == 0) return b;
    Matrix const& d = tot_.differential(n - 1);
    Space const& z = cycles(n - 1, from, to);
    if (z.coordinate)
      b.rows = d.block(0, z.start, dim, d.cols() - z.start).transpose();
    else if (z.rows.rows())
      b.rows = z.rows * d.transpose();
    return b;
  }

  std::size_t page_dim(std::size_t p, std::size_t q, std::size_t r) {
    std::size_t n = p + q;
    std::size_t below = p + 1 >= r ? p + 1 - r : 0;
    return cycles(n, p, p + r).dim() - sum_dim(cycles(n, p + 1, p + r), boundaries(n, below, p));
  }

  std::size_t rank_out(std::size_t p, std::size_t q, std::size_t r) {
    std::size_t n = p + q;
    return cycles(n, p, p + r).dim() - sum_dim(cycles(n, p, p + r + 1), cycles(n, p + 1, p + r));
  }

 private:
  DoubleComplex const& dc_;
  TotalComplex tot_;
  Budget budget_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Space> cache_;
};

Matrix empty_rows(DoubleComplex const& dc, std::size_t p, std::size_t q) {
  return Matrix(dc.field(), 0, dc.dim(p, q));
}

// ker and im of the vertical maps, as row bases; empty outside the window
Matrix vertical_cycles(DoubleComplex const& dc, std::size_t p, std::size_t q) {
  if (!dc.contains(p, q)) return empty_rows(dc, p, q);
  return kernel_basis(dc.vertical(p, q));
}

Matrix vertical_boundaries(DoubleComplex const& dc, std::size_t p, std::size_t q) {
  if (q == 0 || !dc.contains(p, q - 1)) return empty_rows(dc, p, q);
  return subspace_image(dc.vertical(p, q - 1), Matrix::identity(dc.field(), dc.dim(p, q - 1)));
}

std::size_t direct_e2(DoubleComplex const& dc, std::size_t p, std::size_t q) {
  Matrix cycles = vertical_cycles(dc, p, q);
  if (dc.contains(p + 1, q))
    cycles = subspace_intersection(cycles, subspace_preimage(dc.horizontal(p, q), vertical_boundaries(dc, p + 1, q)));
  Matrix bounds = vertical_boundaries(dc, p, q);
  if (p > 0) bounds = subspace_sum(bounds, subspace_image(dc.horizontal(p - 1, q), vertical_cycles(dc, p - 1, q)));
  return cycles.rows() - bounds.rows();
}

// x in K^{p,q}, y in K^{p+1,q-1} with d0 x = 0 and d1 x + d0 y = 0; d2 [x] = [d1 y]
std::size_t zigzag_d2(DoubleComplex const& dc, std::size_t p, std::size_t q) {
  if (q == 0 || !dc.contains(p + 2, q - 1)) return 0;
  Field f = dc.field();
  std::size_t nx = dc.dim(p, q), ny = dc.dim(p + 1, q - 1);
  std::size_t vx = dc.contains(p, q + 1) ? dc.dim(p, q + 1) : 0;
  Matrix system(f, vx + dc.dim(p + 1, q), nx + ny);
  if (vx) system.paste(dc.vertical(p, q), 0, 0);
  system.paste(dc.horizontal(p, q), vx, 0);
  system.paste(dc.vertical(p + 1, q - 1), vx, nx);
  Matrix pairs = kernel_basis(system);
  Matrix ys = pairs.block(0, nx, pairs.rows(), ny);
  Matrix images = subspace_image(dc.horizontal(p + 1, q - 1), ys);
  Matrix indeterminacy = subspace_sum(vertical_boundaries(dc, p + 2, q - 1),
                                      subspace_image(dc.horizontal(p + 1, q - 1), vertical_cycles(dc, p + 1, q - 1)));
  return subspace_sum(images, indeterminacy).rows() - indeterminacy.rows();
}

bool cell_reliable(DoubleComplex const& dc, std::size_t p, std::size_t q, std::size_t r, bool stable) {
  if (!dc.truncated()) return true;
  if (p + r <= dc.p_max() && q + r <= dc.q_max() && p + q + 1 <= dc.n_max()) return true;
  return stable && dc.total_reliable(p + q);
}

}  // namespace

SpectralPages spectral_pages(DoubleComplex const& dc, std::size_t r_max, Budget const& budget) {
  if (r_max < 2) throw DomainError("spectral pages need r_max >= 2");
  Filtration filt(dc, budget);
  SpectralPages out;
  auto cell_at = [&](std::size_t p, std::size_t q, std::size_t r) {
    bool stable = r >= std::max(p + 1, q + 2);
    return PageCell{p, q, filt.page_dim(p, q, r), filt.rank_out(p, q, r), cell_reliable(dc, p, q, r, stable), stable};
  };
  for (std::size_t r = 0; r <= r_max; ++r) {
    Page page{r, {}};
    for (std::size_t p = 0; p <= dc.p_max(); ++p)
      for (std::size_t q = 0; q <= dc.q_max(); ++q)
        if (dc.contains(p, q)) page.cells.push_back(cell_at(p, q, r));
    out.pages.push_back(std::move(page));
  }
  for (auto const& c : out.pages[2].cells) {
    out.infinity.push_back(cell_at(c.p, c.q, std::max(c.p + 1, c.q + 2)));
    out.zigzag_d2.push_back(zigzag_d2(dc, c.p, c.q));
    out.direct_e2.push_back(direct_e2(dc, c.p, c.q));
  }
  out.totals = total_cohomology(dc);
  return out;
}

}  // namespace whlab
