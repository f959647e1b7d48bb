#include "whlab/spectral/double_complex.hpp"

#include "whlab/spectral/total_complex.hpp"

namespace whlab {

namespace {

std::string cell(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

DoubleComplex::DoubleComplex(Field field, std::size_t p_max, std::size_t q_max, std::size_t n_max,
                             std::vector<std::vector<std::size_t>> dims, bool truncated)
    : field_(field), p_max_(p_max), q_max_(q_max), n_max_(n_max), truncated_(truncated) {
  dims_.assign((p_max + 1) * (q_max + 1), 0);
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t q = 0; q <= q_max; ++q)
      if (contains(p, q) && p < dims.size() && q < dims[p].size()) dims_[index(p, q)] = dims[p][q];
  vertical_.resize(dims_.size());
  horizontal_.resize(dims_.size());
  for (std::size_t p = 0; p <= p_max; ++p)
    for (std::size_t q = 0; q <= q_max; ++q) {
      vertical_[index(p, q)] = Matrix(field, dim(p, q + 1), dim(p, q));
      horizontal_[index(p, q)] = Matrix(field, dim(p + 1, q), dim(p, q));
    }
}

std::size_t DoubleComplex::dim(std::size_t p, std::size_t q) const {
  return contains(p, q) ? dims_[index(p, q)] : 0;
}

Matrix const& DoubleComplex::vertical(std::size_t p, std::size_t q) const {
  if (!contains(p, q)) throw DomainError("no cell " + cell(p, q));
  return vertical_[index(p, q)];
}

Matrix const& DoubleComplex::horizontal(std::size_t p, std::size_t q) const {
  if (!contains(p, q)) throw DomainError("no cell " + cell(p, q));
  return horizontal_[index(p, q)];
}

void DoubleComplex::set_vertical(std::size_t p, std::size_t q, Matrix m) {
  if (!contains(p, q) || !contains(p, q + 1)) throw DomainError("vertical map " + cell(p, q) + " leaves the window");
  if (m.rows() != dim(p, q + 1) || m.cols() != dim(p, q) || m.field() != field_)
    throw DomainError("vertical map at " + cell(p, q) + " has the wrong shape");
  vertical_[index(p, q)] = std::move(m);
}

void DoubleComplex::set_horizontal(std::size_t p, std::size_t q, Matrix m) {
  if (!contains(p, q) || !contains(p + 1, q)) throw DomainError("horizontal map " + cell(p, q) + " leaves the window");
  if (m.rows() != dim(p + 1, q) || m.cols() != dim(p, q) || m.field() != field_)
    throw DomainError("horizontal map at " + cell(p, q) + " has the wrong shape");
  horizontal_[index(p, q)] = std::move(m);
}

bool DoubleComplex::total_reliable(std::size_t n) const {
  if (!truncated_) return true;
  return n + 1 <= p_max_ && n + 1 <= q_max_ && n + 1 <= n_max_;
}

std::vector<std::string> validate_double_complex(DoubleComplex const& dc) {
  std::vector<std::string> bad;
  for (std::size_t p = 0; p <= dc.p_max(); ++p)
    for (std::size_t q = 0; q <= dc.q_max(); ++q) {
      if (!dc.contains(p, q)) continue;
      if (dc.contains(p, q + 2) && !(dc.vertical(p, q + 1) * dc.vertical(p, q)).is_zero())
        bad.push_back("d0 d0 != 0 at " + cell(p, q));
      if (dc.contains(p + 2, q) && !(dc.horizontal(p + 1, q) * dc.horizontal(p, q)).is_zero())
        bad.push_back("d1 d1 != 0 at " + cell(p, q));
      if (dc.contains(p + 1, q + 1) &&
          !(dc.vertical(p + 1, q) * dc.horizontal(p, q) + dc.horizontal(p, q + 1) * dc.vertical(p, q)).is_zero())
        bad.push_back("d0 d1 + d1 d0 != 0 at " + cell(p, q));
    }
  return bad;
}

std::vector<TotalDegree> total_cohomology(DoubleComplex const& dc) {
  TotalComplex tot(dc);
  std::vector<std::size_t> ranks;
  for (std::size_t n = 0; n <= dc.n_max(); ++n) ranks.push_back(rank(tot.differential(n)));
  std::vector<TotalDegree> out;
  for (std::size_t n = 0; n <= dc.n_max(); ++n)
    out.push_back({n, tot.dimension(n) - ranks[n] - (n ? ranks[n - 1] : 0), dc.total_reliable(n)});
  return out;
}

}  // namespace whlab
