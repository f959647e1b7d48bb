#include "oracles.hpp"

#include <map>

#include "whlab/cohomology/hochschild.hpp"

namespace whlab::testing {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

// (g f)(h1..hq) = g f(g^-1 h1 g, ..., g^-1 hq g) on C^q(H, M), applied to the rows of `cochains`
Matrix conjugate(GModule const& m, std::vector<std::size_t> const& subgroup, std::size_t g, std::size_t q,
                 Matrix const& cochains) {
  FiniteGroupTable const& grp = m.group();
  std::size_t nh = subgroup.size(), d = m.dimension(), tuples = power(nh, q);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < nh; ++i) position[subgroup[i]] = i;
  std::vector<std::size_t> conj(nh);
  for (std::size_t i = 0; i < nh; ++i) conj[i] = position.at(grp.mul(grp.mul(grp.inv(g), subgroup[i]), g));

  Matrix out(m.field(), cochains.rows(), cochains.cols());
  Matrix const& a = m.action(g);
  for (std::size_t t = 0; t < tuples; ++t) {
    std::size_t moved = 0;
    for (std::size_t k = q, rest = t, scale = 1; k-- > 0; rest /= nh, scale *= nh) moved += conj[rest % nh] * scale;
    for (std::size_t r = 0; r < cochains.rows(); ++r)
      for (std::size_t i = 0; i < d; ++i) {
        Scalar s = Scalar::zero(m.field());
        for (std::size_t j = 0; j < d; ++j) s = s + a.at(i, j) * cochains.at(r, moved * d + j);
        out.set(r, t * d + i, s);
      }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> lhs_e2_oracle(GModule const& m, std::vector<std::size_t> const& subgroup,
                                                    std::size_t p_max, std::size_t q_max) {
  Field f = m.field();
  auto quot = m.group().quotient(subgroup);
  CochainComplex c = hochschild_complex(m.restrict_to(subgroup), q_max);
  std::vector<std::vector<std::size_t>> dims(p_max + 1, std::vector<std::size_t>(q_max + 1, 0));
  for (std::size_t q = 0; q <= q_max; ++q) {
    Matrix cycles = kernel_basis(c.differentials[q]);
    Matrix bounds = q ? subspace_image(c.differentials[q - 1], Matrix::identity(f, c.dims[q - 1]))
                      : Matrix(f, 0, c.dims[0]);
    Matrix reps = complement_in(cycles, bounds);
    std::size_t k = reps.rows();
    Matrix basis = vstack(reps, bounds);
    auto red = row_reduce(basis);
    Matrix back = inverse(basis.select_columns(red.pivots));

    std::vector<Matrix> action;
    for (std::size_t gamma = 0; gamma < quot.group.order(); ++gamma) {
      Matrix moved = conjugate(m, subgroup, quot.lift[gamma], q, reps);
      Matrix coords = moved.select_columns(red.pivots) * back;
      action.push_back(coords.block(0, 0, k, k).transpose());
    }
    GModule hq(quot.group, f, action, "H^q(H,M)");
    auto h = hochschild_cohomology(hq, p_max);
    for (std::size_t p = 0; p <= p_max; ++p) dims[p][q] = h[p].dimension;
  }
  return dims;
}

}  // namespace whlab::testing
