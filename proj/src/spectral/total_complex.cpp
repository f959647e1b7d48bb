#include "whlab/spectral/total_complex.hpp"

namespace whlab {

TotalComplex::TotalComplex(DoubleComplex const& dc) : dc_(dc) {}

std::size_t TotalComplex::offset(std::size_t n, std::size_t p) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < p && i <= n; ++i) out += dc_.dim(i, n - i);
  return out;
}

Matrix const& TotalComplex::differential(std::size_t n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  Matrix d(dc_.field(), dimension(n + 1), dimension(n));
  for (std::size_t p = 0; p <= n; ++p) {
    std::size_t q = n - p;
    if (!dc_.contains(p, q) || dc_.dim(p, q) == 0) continue;
    if (dc_.contains(p, q + 1)) d.paste(dc_.vertical(p, q), offset(n + 1, p), offset(n, p));
    if (dc_.contains(p + 1, q)) d.paste(dc_.horizontal(p, q), offset(n + 1, p + 1), offset(n, p));
  }
  return differentials_.emplace(n, std::move(d)).first->second;
}

}  // namespace whlab
