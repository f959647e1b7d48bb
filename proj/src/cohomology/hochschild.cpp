#include "whlab/cohomology/hochschild.hpp"

#include <limits>

namespace whlab {

namespace {

constexpr std::size_t saturated = std::numeric_limits<std::size_t>::max();

// |G|^k * d, saturating instead of overflowing
std::size_t cochain_dim(std::size_t order, std::size_t k, std::size_t d) {
  std::size_t out = d;
  for (std::size_t i = 0; i < k; ++i) {
    if (order != 0 && out > saturated / order) return saturated;
    out *= order;
  }
  return out;
}

std::string cochain_label(std::size_t k) { return "cochain space C^" + std::to_string(k); }

}  // namespace

std::vector<std::string> CochainComplex::violations() const {
  std::vector<std::string> bad;
  for (std::size_t n = 0; n < differentials.size(); ++n) {
    Matrix const& d = differentials[n];
    if (n + 1 >= dims.size() || d.cols() != dims[n] || d.rows() != dims[n + 1]) {
      bad.push_back("d^" + std::to_string(n) + " has the wrong shape");
      continue;
    }
    if (n + 1 < differentials.size() && !(differentials[n + 1] * d).is_zero())
      bad.push_back("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " != 0");
  }
  return bad;
}

std::vector<std::size_t> CochainComplex::cohomology_dims() const {
  std::vector<std::size_t> ranks;
  for (auto const& d : differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < differentials.size(); ++n)
    out.push_back(dims[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return out;
}

std::vector<ResidueColumn> hochschild_differential_columns(GModule const& m, std::size_t n) {
  std::size_t order = m.group().order(), d = m.dimension();
  std::uint32_t p = m.field().characteristic();
  auto sign = [p](std::size_t i) -> std::uint32_t { return i % 2 ? p - 1 : 1; };
  std::size_t tuples = cochain_dim(order, n, 1);

  std::vector<std::vector<std::uint32_t> const*> act;
  for (std::size_t g = 0; g < order; ++g) act.push_back(&m.action(g).residues());

  std::vector<std::size_t> place(n + 1, 1);  // place[k] = |G|^k
  for (std::size_t k = 1; k <= n; ++k) place[k] = place[k - 1] * order;

  std::vector<ResidueColumn> columns;
  columns.reserve(tuples * d);
  for (std::size_t t = 0; t < tuples; ++t) {
    for (std::size_t j = 0; j < d; ++j) {
      ResidueColumn col;
      // g1 f(g2..)
      for (std::size_t g = 0; g < order; ++g) {
        std::size_t tuple = g * tuples + t;
        auto const& a = *act[g];
        for (std::size_t k = 0; k < d; ++k)
          if (a[k * d + j]) col.emplace_back(tuple * d + k, a[k * d + j]);
      }
      // (-1)^i f(.., g_i g_{i+1}, ..): digits of t are t_1 .. t_n, most significant first
      for (std::size_t i = 1; i <= n; ++i) {
        std::size_t below = place[n - i];
        std::size_t ti = (t / below) % order;
        std::size_t prefix = t / (below * order);
        std::size_t suffix = t % below;
        for (std::size_t a = 0; a < order; ++a) {
          std::size_t b = m.group().mul(m.group().inv(a), ti);
          std::size_t tuple = ((prefix * order + a) * order + b) * below + suffix;
          col.emplace_back(tuple * d + j, sign(i));
        }
      }
      // (-1)^{n+1} f(g1..gn)
      for (std::size_t g = 0; g < order; ++g) col.emplace_back((t * order + g) * d + j, sign(n + 1));
      columns.push_back(std::move(col));
    }
  }
  return columns;
}

CochainComplex hochschild_complex(GModule const& m, std::size_t n_max, Budget const& budget) {
  std::size_t order = m.group().order(), d = m.dimension();
  CochainComplex c{m.field(), {}, {}};
  for (std::size_t k = 0; k <= n_max + 1; ++k) {
    std::size_t dim = cochain_dim(order, k, d);
    budget.check(dim, cochain_label(k));
    c.dims.push_back(dim);
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    budget.check_dense(c.dims[n + 1], c.dims[n], 32, "coboundary d^" + std::to_string(n));
    c.differentials.push_back(from_columns(m.field(), c.dims[n + 1], hochschild_differential_columns(m, n)));
  }
  return c;
}

std::vector<CohomologyDegree> hochschild_cohomology(GModule const& m, std::size_t n_max,
                                                    bool with_representatives, Budget const& budget) {
  std::size_t order = m.group().order(), d = m.dimension();
  std::vector<CohomologyDegree> out;
  if (with_representatives) {
    CochainComplex c = hochschild_complex(m, n_max, budget);
    Matrix previous_image(m.field(), 0, d);
    for (std::size_t n = 0; n <= n_max; ++n) {
      RowReduction red = row_reduce(c.differentials[n]);
      CohomologyDegree deg;
      deg.n = n;
      deg.representatives = complement_in(red.kernel, previous_image);
      deg.dimension = deg.representatives.rows();
      out.push_back(std::move(deg));
      previous_image = row_space_basis(c.differentials[n].transpose());
    }
    return out;
  }
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= n_max + 1; ++k) {
    dims.push_back(cochain_dim(order, k, d));
    budget.check(dims.back(), cochain_label(k));
  }
  std::size_t bits = m.field().characteristic() == 2 ? 1 : 32;
  std::size_t previous_rank = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    budget.check_dense(dims[n], dims[n + 1], bits, "coboundary d^" + std::to_string(n));
    std::size_t r = rank_of_columns(m.field(), dims[n + 1], hochschild_differential_columns(m, n));
    CohomologyDegree deg;
    deg.n = n;
    deg.dimension = dims[n] - r - previous_rank;
    deg.representatives = Matrix(m.field(), 0, dims[n]);
    out.push_back(std::move(deg));
    previous_rank = r;
  }
  return out;
}

std::vector<std::size_t> minimal_resolution(FiniteGroupTable const& group, Field field, std::size_t n_max,
                                            Budget const& budget) {
  std::vector<std::size_t> betti(n_max + 1, 0);
  betti[0] = 1;
  std::size_t order = group.order();
  if (order == 1) return betti;
  if (field.is_rational() || group.p_group_prime() != field.characteristic())
    throw DomainError("minimal resolution needs a p-group with p = char of the field");

  // left multiplication by g on A^b, A = F_p[G], coordinates (component, element)
  auto translate = [&](Matrix const& rows, std::size_t g) {
    Matrix out(field, rows.rows(), rows.cols());
    std::size_t b = rows.cols() / order;
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t c = 0; c < b; ++c)
        for (std::size_t h = 0; h < order; ++h)
          if (!rows.is_zero_at(r, c * order + h)) out.set(r, c * order + group.mul(g, h), rows.at(r, c * order + h));
    return out;
  };

  // kernel of the augmentation A -> F_p
  Matrix kernel(field, 0, order);
  for (std::size_t h = 0; h < order; ++h) {
    if (h == group.identity()) continue;
    Matrix row(field, 1, order);
    row.set(0, h, 1L);
    row.set(0, group.identity(), -1L);
    kernel.append_row(row);
  }
  for (std::size_t s = 0; s < n_max; ++s) {
    Matrix radical_part(field, 0, kernel.cols());
    for (std::size_t g = 0; g < order; ++g) {
      if (g == group.identity()) continue;
      radical_part = vstack(radical_part, translate(kernel, g) - kernel);
    }
    Matrix generators = complement_in(kernel, radical_part);
    betti[s + 1] = generators.rows();
    if (s + 1 == n_max) break;
    std::size_t target = kernel.cols();
    std::size_t source = betti[s + 1] * order;
    budget.check(source, "free module of rank " + std::to_string(betti[s + 1]));
    budget.check_dense(target, source, field.characteristic() == 2 ? 1 : 32, "resolution differential");
    Matrix map(field, target, source);
    for (std::size_t h = 0; h < order; ++h) {
      Matrix moved = translate(generators, h);
      for (std::size_t j = 0; j < generators.rows(); ++j)
        for (std::size_t r = 0; r < target; ++r)
          if (!moved.is_zero_at(j, r)) map.set(r, j * order + h, moved.at(j, r));
    }
    kernel = kernel_basis(map);
  }
  return betti;
}

}  // namespace whlab
